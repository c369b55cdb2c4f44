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

// Reference implementations used only by tests. They are written directly
// from the definitions and share no code with the library beyond the
// plain graph and tree containers.

#ifndef BURLING_TESTS_ORACLES_HPP_
#define BURLING_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "burling/graph.hpp"
#include "burling/tree.hpp"

namespace oracle {

using burling::Arc;
using burling::Derivation;
using burling::Graph;
using burling::OrientedGraph;
using burling::VertexId;
using burling::VertexSet;

// Arc classes recomputed from tree depths: for every kept u, its kept
// out-neighbours sorted by depth; the shallowest gives the top arc and the
// deepest the bottom arc. Values: 'T', 'B', 'X' (both), 'M'.
inline std::map<Arc, char> depth_classes(const Derivation& d) {
  auto depth = d.tree.depths();
  std::map<Arc, char> out;
  for (const auto& u : d.kept) {
    std::vector<VertexId> outs;
    for (const auto& w : d.tree.choose_of(u)) {
      if (d.kept.count(w)) outs.push_back(w);
    }
    std::sort(outs.begin(), outs.end(),
              [&](const VertexId& a, const VertexId& b) { return depth[a] < depth[b]; });
    for (std::size_t i = 0; i < outs.size(); ++i) {
      char c = 'M';
      if (outs.size() == 1) {
        c = 'X';
      } else if (i == 0) {
        c = 'T';
      } else if (i + 1 == outs.size()) {
        c = 'B';
      }
      out[{u, outs[i]}] = c;
    }
  }
  return out;
}

inline bool top(char c) { return c == 'T' || c == 'X'; }
inline bool bottom(char c) { return c == 'B' || c == 'X'; }

// Graph with arc (a, b) replaced by the given arcs and extra vertices.
inline OrientedGraph replace_arc(const OrientedGraph& g, const Arc& old,
                                 const std::vector<Arc>& arcs,
                                 const std::vector<VertexId>& extra) {
  std::vector<Arc> all;
  for (const auto& a : g.arcs()) {
    if (a != old) all.push_back(a);
  }
  all.insert(all.end(), arcs.begin(), arcs.end());
  std::vector<VertexId> vs = g.vertices();
  vs.insert(vs.end(), extra.begin(), extra.end());
  return OrientedGraph(vs, all);
}

// True when the oriented graph has a directed cycle (repeated sink removal).
inline bool has_directed_cycle(const OrientedGraph& g) {
  std::map<VertexId, std::size_t> outdeg;
  for (const auto& v : g.vertices()) outdeg[v] = g.out_degree(v);
  std::vector<VertexId> sinks;
  for (const auto& [v, k] : outdeg) {
    if (k == 0) sinks.push_back(v);
  }
  std::size_t removed = 0;
  while (!sinks.empty()) {
    VertexId v = sinks.back();
    sinks.pop_back();
    ++removed;
    for (const auto& u : g.in_neighbors(v)) {
      if (--outdeg[u] == 0) sinks.push_back(u);
    }
  }
  return removed != g.num_vertices();
}

inline bool has_triangle(const Graph& g) {
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        if (g.has_edge(vs[i], vs[k]) && g.has_edge(vs[j], vs[k])) return true;
      }
    }
  }
  return false;
}

// Every induced cycle of length >= 4 as a vertex set (all subsets).
inline std::set<VertexSet> holes_by_subsets(const Graph& g) {
  const VertexSet all = g.vertex_set();
  std::vector<VertexId> vs(all.begin(), all.end());
  std::set<VertexSet> out;
  const std::size_t n = vs.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) < 4) continue;
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (std::uint64_t{1} << i)) s.insert(vs[i]);
    }
    bool ok = true;
    for (const auto& v : s) {
      std::size_t d = 0;
      for (const auto& w : g.neighbors(v)) d += s.count(w);
      ok = ok && d == 2;
    }
    if (!ok) continue;
    // connected?
    VertexSet seen{*s.begin()};
    std::vector<VertexId> stack{*s.begin()};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& w : g.neighbors(v)) {
        if (s.count(w) && seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() == s.size()) out.insert(s);
  }
  return out;
}

}  // namespace oracle

#endif  // BURLING_TESTS_ORACLES_HPP_
