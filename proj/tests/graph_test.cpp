// Copyright 2026 The burling-tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <random>

#include "burling/graph.hpp"

using namespace burling;

namespace {

OrientedGraph oriented_c4() {
  return std::get<OrientedGraph>(parse_graph("directed\nu x\nu y\nv x\nv y\n"));
}

// Brute force: every vertex subset of size >= 4 that induces a 2-regular
// connected graph is a hole.
std::set<VertexSet> brute_force_holes(const Graph& g) {
  const VertexSet all = g.vertex_set();
  std::vector<VertexId> vs(all.begin(), all.end());
  std::set<VertexSet> out;
  const std::size_t n = vs.size();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) < 4) continue;
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (1u << i)) s.insert(vs[i]);
    }
    Graph h = induced_subgraph(g, s);
    bool two_regular = true;
    for (const auto& v : s) two_regular = two_regular && h.degree(v) == 2;
    if (two_regular && is_connected(h)) out.insert(s);
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<VertexId> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) es.emplace_back(vs[i], vs[j]);
    }
  }
  return Graph(vs, es);
}

}  // namespace

TEST_CASE("parse undirected path") {
  auto g = std::get<Graph>(parse_graph("undirected\na b\nb c"));
  CHECK(g.vertices() == std::vector<VertexId>{"a", "b", "c"});
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge("b", "a"));
  CHECK_FALSE(g.has_edge("a", "c"));
}

TEST_CASE("parse oriented C4 and degree queries") {
  auto g = oriented_c4();
  CHECK(g.num_arcs() == 4);
  CHECK(g.sources() == VertexSet{"u", "v"});
  CHECK(g.sinks() == VertexSet{"x", "y"});
  CHECK(degree_profile(g, "u") == DegreeProfile{0, 2});
  CHECK(degree_profile(g, "x") == DegreeProfile{2, 0});
  CHECK_THROWS_AS(degree_profile(g, "zz"), Error);
}

TEST_CASE("parse errors name the line") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("directed\na b\nb a") == 3);
  CHECK(line_of("undirected\na b\nb a") == 3);
  CHECK(line_of("# hi\nsideways\na b") == 2);
  CHECK(line_of("undirected\na a") == 2);
  CHECK(line_of("undirected\na b c") == 2);
  CHECK(line_of("undirected\nvertex vertex") == 2);
  try {
    parse_graph("directed\na b\nb a");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("both-direction arc pair") != std::string::npos);
  }
}

TEST_CASE("serialization format") {
  auto g = std::get<Graph>(parse_graph("# c\nundirected\nvertex z\nc b\nb a\nvertex q\n"));
  CHECK(serialize(g) == "undirected\nvertex q\nvertex z\na b\nb c\n");
  auto o = oriented_c4();
  CHECK(serialize(o) == "directed\nu x\nu y\nv x\nv y\n");
}

TEST_CASE("round trip on random graphs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(rng, 1 + t % 9, 0.3);
    std::string s = serialize(g);
    auto back = std::get<Graph>(parse_graph(s));
    CHECK(back == g);
    CHECK(serialize(back) == s);
  }
}

TEST_CASE("underlying") {
  auto u = underlying(oriented_c4());
  CHECK(u.num_edges() == 4);
  CHECK(u.has_edge("x", "u"));
  CHECK(underlying(OrientedGraph()).num_vertices() == 0);
  OrientedGraph one({"a", "b"}, {{"a", "b"}});
  CHECK(underlying(one).has_edge("a", "b"));
}

TEST_CASE("induced subgraph") {
  auto c4 = underlying(oriented_c4());
  auto p = induced_subgraph(c4, {"u", "x", "v"});
  CHECK(p.num_edges() == 2);
  CHECK(induced_subgraph(c4, c4.vertex_set()) == c4);
  CHECK(induced_subgraph(c4, {}).num_vertices() == 0);
  CHECK_THROWS_AS(induced_subgraph(c4, {"nope"}), Error);
}

TEST_CASE("holes of small examples") {
  auto c4 = underlying(oriented_c4());
  auto holes = enumerate_holes(c4);
  REQUIRE(holes.size() == 1);
  CHECK(holes[0].cycle == std::vector<VertexId>{"u", "x", "v", "y"});

  std::vector<Edge> k33;
  for (auto a : {"a1", "a2", "a3"}) {
    for (auto b : {"b1", "b2", "b3"}) k33.emplace_back(a, b);
  }
  Graph k(std::vector<VertexId>{"a1", "a2", "a3", "b1", "b2", "b3"}, k33);
  CHECK(enumerate_holes(k).size() == brute_force_holes(k).size());
  CHECK(enumerate_holes(k).size() == 9);

  Graph tree({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"c", "d"}, {"c", "e"}});
  CHECK(enumerate_holes(tree).empty());
}

TEST_CASE("hole enumeration matches brute force") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    Graph g = random_graph(rng, 4 + t % 6, 0.2 + 0.1 * (t % 4));
    auto holes = enumerate_holes(g);
    std::set<VertexSet> found;
    for (const auto& h : holes) {
      CHECK(is_hole(g, h.cycle));
      CHECK(canonical_hole(h.cycle) == h);
      found.insert(VertexSet(h.cycle.begin(), h.cycle.end()));
    }
    CHECK(found.size() == holes.size());
    CHECK(found == brute_force_holes(g));
  }
}

TEST_CASE("hole budget is explicit") {
  std::vector<VertexId> vs;
  for (int i = 0; i < 20; ++i) vs.push_back("v" + std::to_string(i));
  Graph g(vs, {});
  CHECK_THROWS_AS(enumerate_holes(g), ResourceError);
  CHECK(enumerate_holes(g, 20).empty());
}

TEST_CASE("triangles and components") {
  Graph g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(find_triangle(g) == std::vector<VertexId>{"a", "b", "c"});
  CHECK(connected_components(g).size() == 2);
  CHECK_FALSE(is_connected(g));
}
