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

#include "burling/generators.hpp"

#include <algorithm>

#include "burling/sequential.hpp"
#include "burling/transforms.hpp"

namespace burling {

namespace {

std::string tv(int i) { return "t" + std::to_string(i); }

struct TreeShape {
  int root = -1;
  std::vector<std::vector<int>> children;
};

TreeShape check_parents(const std::vector<int>& parents) {
  const int n = static_cast<int>(parents.size());
  TreeShape s;
  s.children.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (parents[i] == -1) {
      if (s.root != -1) throw Error("tree spec has more than one root");
      s.root = i;
    } else if (parents[i] < 0 || parents[i] >= n || parents[i] == i) {
      throw Error("tree spec: invalid parent index for t" + std::to_string(i));
    } else {
      s.children[parents[i]].push_back(i);
    }
  }
  if (s.root == -1) throw Error("tree spec has no root");
  for (int i = 0; i < n; ++i) {
    int cur = i;
    for (int steps = 0; cur != s.root; ++steps) {
      if (steps > n) throw Error("tree spec contains a cycle");
      cur = parents[cur];
    }
  }
  return s;
}

std::vector<int> chandelier_leaves(const TreeShape& s) {
  std::vector<int> leaves;
  for (int i = 0; i < static_cast<int>(s.children.size()); ++i) {
    if (i != s.root && s.children[i].empty()) leaves.push_back(i);
  }
  if (leaves.size() < 2) throw Error("a chandelier needs an in-tree with at least two leaves");
  return leaves;
}

}  // namespace

OrientedGraph gen_chandelier(const std::vector<int>& parents) {
  TreeShape s = check_parents(parents);
  auto leaves = chandelier_leaves(s);
  std::vector<VertexId> vs;
  std::vector<Arc> arcs;
  for (int i = 0; i < static_cast<int>(parents.size()); ++i) {
    vs.push_back(tv(i));
    if (parents[i] >= 0) arcs.emplace_back(tv(i), tv(parents[i]));
  }
  vs.push_back("p");
  for (int l : leaves) arcs.emplace_back(tv(l), "p");
  return OrientedGraph(vs, arcs);
}

Graph gen_luxury_chandelier(const std::vector<int>& parents) {
  TreeShape s = check_parents(parents);
  auto leaves = chandelier_leaves(s);
  if (s.children[s.root].size() < 2) {
    throw Error("luxury chandelier: the root must have at least two children");
  }
  for (int l : leaves) {
    int p = parents[l];
    std::size_t degree = s.children[p].size() + (parents[p] >= 0 ? 1 : 0);
    if (degree != 2) {
      throw Error("luxury chandelier: the neighbour of leaf t" + std::to_string(l) +
                  " must have degree two");
    }
  }
  return underlying(gen_chandelier(parents));
}

Graph gen_wheel(int rim, const std::vector<int>& spokes) {
  if (rim < 4) throw Error("wheel: the rim must have at least 4 vertices");
  std::vector<int> sorted = spokes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("wheel: spoke positions must be distinct");
  }
  if (sorted.size() < 3) throw Error("wheel: at least three spokes are needed");
  for (int p : sorted) {
    if (p < 0 || p >= rim) throw Error("wheel: spoke position out of range");
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int a = sorted[i];
    int b = sorted[(i + 1) % sorted.size()];
    if ((b - a + rim) % rim == 1) {
      throw Error("wheel: spokes at adjacent rim positions create a triangle");
    }
  }
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 0; i < rim; ++i) {
    vs.push_back("r" + std::to_string(i));
    es.emplace_back("r" + std::to_string(i), "r" + std::to_string((i + 1) % rim));
  }
  vs.push_back("c");
  for (int p : sorted) es.emplace_back("c", "r" + std::to_string(p));
  return Graph(vs, es);
}

Graph gen_theta(int l1, int l2, int l3) {
  std::array<int, 3> ls{l1, l2, l3};
  int ones = 0;
  for (int l : ls) {
    if (l < 1) throw Error("theta: path lengths must be at least 1");
    if (l == 1) ++ones;
  }
  if (ones > 1) throw Error("theta: at most one path may have length 1");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (ls[i] + ls[j] < 4) throw Error("theta: every pair of paths must form a hole");
    }
  }
  std::vector<VertexId> vs{"u", "v"};
  std::vector<Edge> es;
  for (int i = 0; i < 3; ++i) {
    VertexId prev = "u";
    for (int j = 1; j < ls[i]; ++j) {
      VertexId cur = "p" + std::to_string(i) + "_" + std::to_string(j);
      vs.push_back(cur);
      es.emplace_back(prev, cur);
      prev = cur;
    }
    es.emplace_back(prev, "v");
  }
  return Graph(vs, es);
}

Graph gen_flower(int core, const std::vector<int>& petal_lengths) {
  if (core < 4) throw Error("flower: the core hole needs at least 4 vertices");
  if (static_cast<int>(petal_lengths.size()) != core) {
    throw Error("flower: one petal length per core edge is required");
  }
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  auto c = [](int i) { return "c" + std::to_string(i); };
  for (int i = 0; i < core; ++i) {
    vs.push_back(c(i));
    es.emplace_back(c(i), c((i + 1) % core));
  }
  for (int i = 0; i < core; ++i) {
    if (petal_lengths[i] < 3) throw Error("flower: petal paths need at least 3 edges");
    VertexId prev = c(i);
    for (int j = 1; j < petal_lengths[i]; ++j) {
      VertexId cur = "p" + std::to_string(i) + "_" + std::to_string(j);
      vs.push_back(cur);
      es.emplace_back(prev, cur);
      prev = cur;
    }
    es.emplace_back(prev, c((i + 1) % core));
  }
  return Graph(vs, es);
}

Graph gen_k4_subdivision(const std::array<int, 6>& lengths) {
  static const std::array<std::pair<const char*, const char*>, 6> kPairs = {
      {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}}};
  std::vector<VertexId> vs{"a", "b", "c", "d"};
  std::vector<Edge> es;
  for (int i = 0; i < 6; ++i) {
    if (lengths[i] < 1) throw Error("K4 subdivision: path lengths must be at least 1");
    std::string name = std::string(kPairs[i].first) + kPairs[i].second;
    VertexId prev = kPairs[i].first;
    for (int j = 1; j < lengths[i]; ++j) {
      VertexId cur = name + std::to_string(j);
      vs.push_back(cur);
      es.emplace_back(prev, cur);
      prev = cur;
    }
    es.emplace_back(prev, kPairs[i].second);
  }
  return Graph(vs, es);
}

// --------------------------------------------------------------- catalogue

namespace {

Derivation square_c4() {
  Derivation d;
  d.tree.root = "r";
  d.tree.parent = {{"u", "r"}, {"v", "r"}, {"x", "r"}, {"y", "x"}};
  d.tree.last_born = {{"r", "x"}, {"x", "y"}};
  d.tree.choose = {{"u", {"x", "y"}}, {"v", {"x", "y"}}};
  d.kept = {"u", "v", "x", "y"};
  return d;
}

Derivation k33() {
  Derivation d;
  d.tree.root = "r";
  d.tree.parent = {{"x1", "r"}, {"x2", "x1"}, {"x3", "x2"},
                   {"u1", "r"}, {"u2", "r"},  {"u3", "r"}};
  d.tree.last_born = {{"r", "x1"}, {"x1", "x2"}, {"x2", "x3"}};
  for (auto u : {"u1", "u2", "u3"}) d.tree.choose[u] = {"x1", "x2", "x3"};
  d.kept = {"u1", "u2", "u3", "x1", "x2", "x3"};
  return d;
}

// s -> {a, b, c} plus an isolated vertex z, either beside the spine or at
// its end.
Derivation two_trees(bool deep) {
  Derivation d;
  d.tree.root = "r";
  d.tree.parent = {{"a", "r"}, {"b", "a"}, {"c", "b"}, {"s", "r"}};
  d.tree.last_born = {{"r", "a"}, {"a", "b"}, {"b", "c"}};
  if (deep) {
    d.tree.parent["z"] = "c";
    d.tree.last_born["c"] = "z";
  } else {
    d.tree.parent["z"] = "r";
  }
  d.tree.choose = {{"s", {"a", "b", "c"}}};
  d.kept = {"a", "b", "c", "s", "z"};
  return d;
}

Graph cycle(int n) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back("v" + std::to_string(i));
    es.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
  }
  return Graph(vs, es);
}

OrientedGraph nobility4() {
  std::vector<Arc> arcs;
  const std::array<std::array<const char*, 3>, 3> outs = {
      {{"1", "2", "3"}, {"2", "3", "4"}, {"3", "4", "5"}}};
  for (int i = 0; i < 3; ++i) {
    for (auto w : outs[i]) arcs.emplace_back("s" + std::to_string(i + 1), w);
  }
  return OrientedGraph({"s1", "s2", "s3", "1", "2", "3", "4", "5"}, arcs);
}

// Three C4s x-a-a1-y, x-b-b1-y, x-c-c1-y sharing the edge xy. Smallest
// graph with: every hole a C4, G - y a tree, a full star cutset, an
// orientation good for every hole, and no Burling derivation.
Graph non_burling() {
  std::vector<Edge> es{{"x", "y"}};
  for (auto p : {"a", "b", "c"}) {
    const std::string v = p;
    es.insert(es.end(), {{"x", v}, {v, v + "1"}, {v + "1", "y"}});
  }
  return Graph({"x", "y", "a", "b", "c", "a1", "b1", "c1"}, es);
}

// Path p0..p6 with a centre c adjacent to p0, p2, p4 and p6, then two
// bottom arcs stretched. The even path vertices form the last-born spine.
Derivation near_wheel() {
  Derivation d;
  d.tree.root = "r";
  d.tree.parent = {{"p0", "r"}, {"p2", "p0"}, {"p4", "p2"}, {"p6", "p4"}, {"c", "r"},
                   {"p1", "r"}, {"p3", "p0"}, {"p5", "p2"}};
  d.tree.last_born = {{"r", "p0"}, {"p0", "p2"}, {"p2", "p4"}, {"p4", "p6"}};
  d.tree.choose = {{"c", {"p0", "p2", "p4", "p6"}},
                   {"p1", {"p0", "p2"}},
                   {"p3", {"p2", "p4"}},
                   {"p5", {"p4", "p6"}}};
  d.kept = {"c", "p0", "p1", "p2", "p3", "p4", "p5", "p6"};
  return expand_arcs(d, parse_expand_plan("p1>p2:bottom:1,p5>p6:bottom:2"));
}

// Core c0 c1 c2 c3 with petals on three of its four edges; the petal on
// c0c1 is then stretched to a C5 by subdividing p0_1 -> c0.
Derivation near_flower() {
  Derivation d;
  d.tree.root = "r";
  d.tree.parent = {{"p0_2", "r"}, {"c0", "p0_2"}, {"c2", "c0"},  {"p1_1", "c2"},
                   {"p2_2", "c2"}, {"c1", "r"},   {"p0_1", "r"}, {"c3", "p0_2"},
                   {"p1_2", "c0"}, {"p2_1", "c0"}};
  d.tree.last_born = {{"r", "p0_2"}, {"p0_2", "c0"}, {"c0", "c2"}, {"c2", "p1_1"}};
  d.tree.choose = {{"c1", {"p0_2", "c0", "c2", "p1_1"}},
                   {"c3", {"c0", "c2", "p2_2"}},
                   {"p0_1", {"p0_2", "c0"}},
                   {"p1_2", {"c2", "p1_1"}},
                   {"p2_1", {"c2", "p2_2"}}};
  d.kept = {"c0", "c1", "c2", "c3", "p0_1", "p0_2", "p1_1", "p1_2", "p2_1", "p2_2"};
  return expand_arcs(d, parse_expand_plan("p0_1>c0:bottom:1"));
}

// Base d -> a -> c <- b <- e with small children below a, b and c.
Derivation sequential_two() {
  auto leaf = [](std::vector<VertexId> vs, std::vector<Arc> arcs) {
    SequentialDecomposition sd;
    sd.base = OrientedGraph(std::move(vs), arcs);
    return sd;
  };
  SequentialDecomposition sd;
  sd.base = OrientedGraph({"a", "b", "c", "d", "e"}, {{"d", "a"}, {"a", "c"}, {"e", "b"}, {"b", "c"}});
  sd.children["a"] = leaf({"a1", "a2"}, {{"a1", "a2"}});
  sd.children["b"] = leaf({"b1"}, {});
  sd.children["c"] = leaf({"c1", "c2"}, {{"c1", "c2"}});
  sd.links = {{"d", {"a1"}}, {"a", {"c2"}}, {"e", {"b1"}}, {"b", {"c1"}}};
  return tree_from_seq(sd);
}

}  // namespace

std::vector<std::string> figure_names() {
  return {"square-c4",
          "k33",
          "c6",
          "nobility4",
          "wheel",
          "flower",
          "k4-all-subdivided",
          "k4-one-undivided",
          "k4-matching-undivided",
          "non-burling",
          "sequential-2",
          "near-wheel",
          "near-flower",
          "two-trees-t1",
          "two-trees-t2"};
}

FigureInstance gen_figure(const std::string& name) {
  if (name == "square-c4") return square_c4();
  if (name == "k33") return k33();
  if (name == "c6") return cycle(6);
  if (name == "nobility4") return nobility4();
  if (name == "wheel") return gen_wheel(6, {0, 2, 4});
  if (name == "flower") return gen_flower(4, {3, 3, 3, 3});
  if (name == "k4-all-subdivided") return gen_k4_subdivision({2, 2, 2, 2, 2, 2});
  if (name == "k4-one-undivided") return gen_k4_subdivision({1, 2, 2, 2, 2, 2});
  if (name == "k4-matching-undivided") return gen_k4_subdivision({1, 2, 2, 2, 2, 1});
  if (name == "non-burling") return non_burling();
  if (name == "sequential-2") return sequential_two();
  if (name == "near-wheel") return near_wheel();
  if (name == "near-flower") return near_flower();
  if (name == "two-trees-t1") return two_trees(false);
  if (name == "two-trees-t2") return two_trees(true);
  throw Error("unknown figure '" + name + "'");
}

Derivation random_derivation(std::mt19937_64& rng, int max_tree_vertices) {
  if (max_tree_vertices < 1) throw Error("random_derivation: need at least one tree vertex");
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const int n = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_tree_vertices)));
  std::vector<std::vector<int>> kids(n);
  Derivation d;
  d.tree.root = tv(0);
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) {
    parent[i] = static_cast<int>(pick(static_cast<std::size_t>(i)));
    kids[parent[i]].push_back(i);
    d.tree.parent[tv(i)] = tv(parent[i]);
  }
  std::vector<int> last(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!kids[i].empty()) {
      last[i] = kids[i][pick(kids[i].size())];
      d.tree.last_born[tv(i)] = tv(last[i]);
    }
  }
  for (int i = 1; i < n; ++i) {
    if (last[parent[i]] == i || pick(5) == 0) continue;
    std::vector<VertexId> branch;
    int cur = last[parent[i]];
    branch.push_back(tv(cur));
    while (!kids[cur].empty() && pick(3) != 0) {
      cur = kids[cur][pick(kids[cur].size())];
      branch.push_back(tv(cur));
    }
    d.tree.choose[tv(i)] = std::move(branch);
  }
  for (int i = 0; i < n; ++i) {
    if (pick(4) != 0) d.kept.insert(tv(i));
  }
  return d;
}

std::string serialize(const FigureInstance& f) {
  return std::visit([](const auto& x) { return burling::serialize(x); }, f);
}

}  // namespace burling
