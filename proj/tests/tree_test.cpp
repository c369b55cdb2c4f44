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

#include "burling/generators.hpp"
#include "burling/tree.hpp"
#include "oracles.hpp"

using namespace burling;

namespace {

Derivation square() { return std::get<Derivation>(gen_figure("square-c4")); }

bool has_violation(const BurlingTree& t, const std::string& needle) {
  for (const auto& v : validate_tree(t)) {
    if (v.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate: single vertex and the square tree") {
  BurlingTree t;
  t.root = "r";
  CHECK(validate_tree(t).empty());
  CHECK(validate_tree(square().tree).empty());
}

TEST_CASE("validate: violations name vertex and clause") {
  auto t = square().tree;
  t.choose["x"] = {"y"};
  CHECK(has_violation(t, "x: choose of a last-born must be empty"));

  t = square().tree;
  t.choose["r"] = {"x"};
  CHECK(has_violation(t, "r: choose of the root must be empty"));

  t = square().tree;
  t.choose["u"] = {"y"};
  CHECK(has_violation(t, "u: choose must start at the last-born of its parent"));

  t = square().tree;
  t.choose["u"] = {"x", "v"};
  CHECK(has_violation(t, "u: choose must follow a branch"));

  t = square().tree;
  t.last_born.erase("x");
  CHECK(has_violation(t, "x: internal vertex has no last-born"));

  t = square().tree;
  t.last_born["x"] = "u";
  CHECK(has_violation(t, "x: last-born u is not a child"));

  t = square().tree;
  t.parent["x"] = "y";
  CHECK(has_violation(t, "cycle"));
}

TEST_CASE("fully_derive and derive on the square tree") {
  auto d = square();
  auto full = fully_derive(d.tree);
  CHECK(full.arcs() == std::set<Arc>{{"u", "x"}, {"u", "y"}, {"v", "x"}, {"v", "y"}});
  CHECK(full.has_vertex("r"));
  CHECK(full.in_degree("r") == 0);
  CHECK(full.out_degree("r") == 0);
  auto g = derive(d);
  CHECK(g == std::get<OrientedGraph>(parse_graph("directed\nu x\nu y\nv x\nv y\n")));
  d.kept.clear();
  CHECK(derive(d).num_vertices() == 0);
  d.kept = {"nope"};
  CHECK_THROWS_AS(derive(d), Error);
}

TEST_CASE("all choose maps empty gives an edgeless graph") {
  auto t = square().tree;
  t.choose.clear();
  auto g = fully_derive(t);
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_arcs() == 0);
  BurlingTree single;
  single.root = "r";
  CHECK(fully_derive(single).num_vertices() == 1);
}

TEST_CASE("classify arcs") {
  auto classes = classify_arcs(square());
  CHECK(classes.at({"u", "x"}) == ArcClass::Top);
  CHECK(classes.at({"u", "y"}) == ArcClass::Bottom);
  auto d = square();
  d.kept.erase("y");
  CHECK(classify_arcs(d).at({"u", "x"}) == ArcClass::TopAndBottom);

  auto k = std::get<Derivation>(gen_figure("k33"));
  auto kc = classify_arcs(k);
  auto oc = oracle::depth_classes(k);
  CHECK(kc.size() == 9);
  for (const auto& [arc, c] : kc) {
    CHECK(is_top(c) == oracle::top(oc.at(arc)));
    CHECK(is_bottom(c) == oracle::bottom(oc.at(arc)));
  }
  CHECK(kc.at({"u1", "x1"}) == ArcClass::Top);
  CHECK(kc.at({"u2", "x2"}) == ArcClass::Middle);
  CHECK(kc.at({"u3", "x3"}) == ArcClass::Bottom);
}

TEST_CASE("check_derivation") {
  auto c4 = std::get<OrientedGraph>(parse_graph("directed\nu x\nu y\nv x\nv y\n"));
  CHECK(check_derivation(c4, square()));
  auto flipped = std::get<OrientedGraph>(parse_graph("directed\nx u\nu y\nv x\nv y\n"));
  CHECK_FALSE(check_derivation(flipped, square()));
  CHECK(derivation_mismatch(flipped, square()).value().find("x u") != std::string::npos);
  Derivation empty;
  empty.tree.root = "r";
  CHECK(check_derivation(OrientedGraph(), empty));
}

TEST_CASE("tree file round trip") {
  auto d = square();
  std::string text = serialize(d);
  CHECK(text ==
        "root: r\nedges:\n  r u\n  r v\n  r x\n  x y\nlast_born:\n  r x\n  x y\n"
        "choose:\n  u: x y\n  v: x y\nkept:\n  u\n  v\n  x\n  y\n");
  CHECK(parse_derivation(text) == d);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto r = random_derivation(rng, 12);
    auto back = parse_derivation(serialize(r));
    CHECK(back == r);
    CHECK(serialize(back) == serialize(r));
  }
}

TEST_CASE("tree file errors and unknown fields") {
  CHECK_THROWS_AS(parse_derivation("edges:\n  r u\n"), ParseError);
  CHECK_THROWS_AS(parse_derivation("root: r\nkept:\n  u\nedges:\n  r u\n"), ParseError);
  try {
    parse_derivation("root: r\nedges:\n  r\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  auto d = parse_derivation("cert_version: 1\nresult: burling\nroot: r\nedges:\n  r u\n"
                            "last_born:\n  r u\nkept:\n  u\nstats:\n  subsets: 3\n");
  CHECK(d.tree.root == "r");
  CHECK(d.kept == VertexSet{"u"});
}

TEST_CASE("derived graph invariants on random trees") {
  std::mt19937_64 rng(2026);
  for (int iter = 0; iter < 300; ++iter) {
    auto d = random_derivation(rng, 12);
    REQUIRE(validate_tree(d.tree).empty());
    auto g = derive(d);
    CHECK_FALSE(oracle::has_triangle(underlying(g)));
    CHECK_FALSE(oracle::has_directed_cycle(g));
    if (g.num_vertices() > 0) CHECK_FALSE(g.sources().empty());
    for (const auto& [u, v] : g.arcs()) {
      CHECK(d.tree.is_ancestor(d.tree.parent.at(u), d.tree.parent.at(v)));
    }
    auto kids = d.tree.children();
    for (const auto& [v, cs] : kids) {
      if (!cs.empty()) continue;
      auto branch = d.tree.path_from_root(v);
      for (std::size_t i = 0; i < branch.size(); ++i) {
        for (std::size_t j = i + 1; j < branch.size(); ++j) {
          if (d.kept.count(branch[i]) && d.kept.count(branch[j])) {
            CHECK_FALSE(g.adjacent(branch[i], branch[j]));
          }
        }
      }
    }
    for (const auto& v : d.kept) {
      if (d.tree.is_last_born(v)) CHECK(g.out_degree(v) == 0);
    }
    auto classes = classify_arcs(d);
    auto oc = oracle::depth_classes(d);
    CHECK(classes.size() == g.num_arcs());
    for (const auto& [arc, c] : classes) {
      CHECK(is_top(c) == oracle::top(oc.at(arc)));
      CHECK(is_bottom(c) == oracle::bottom(oc.at(arc)));
    }
  }
}
