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

// Top-sets, chandeliers, hole special vertices and star cutsets.

#ifndef BURLING_STRUCTURE_HPP_
#define BURLING_STRUCTURE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burling/graph.hpp"
#include "burling/tree.hpp"

namespace burling {

struct TopSetReport {
  VertexSet top_set;
  // Every kept vertex mapped to the unique top-set vertex among its
  // ancestors (itself included).
  std::map<VertexId, VertexId> top_ancestor;
  VertexSet pivots;
  VertexSet antennas;
};

TopSetReport top_set(const Derivation& d);

// First arc uv (in arc order) for which neither u' = v' with u != u' and
// v != v', nor u = u' with uv' an arc, holds.
std::optional<Arc> check_top_ancestor_dichotomy(const Derivation& d);
std::optional<Arc> check_top_ancestor_dichotomy(const OrientedGraph& g, const TopSetReport& r);

bool is_in_forest(const OrientedGraph& g);
bool is_in_tree(const OrientedGraph& g);
bool is_in_star(const OrientedGraph& g);

struct ChandelierWitness {
  VertexId pivot;
  VertexId bottom;
};

// The smallest valid pivot label wins when several vertices qualify.
std::optional<ChandelierWitness> oriented_chandelier(const OrientedGraph& g);
inline bool is_oriented_chandelier(const OrientedGraph& g) {
  return oriented_chandelier(g).has_value();
}

struct HoleAnalysis {
  VertexId pivot;
  std::pair<VertexId, VertexId> antennas;
  VertexId bottom;
  VertexSet subordinate;
};

// nullopt when the hole is not chandelier-oriented. Throws Error if `h` is
// not a hole of the underlying graph. A C4 has two readings (either sink
// can be the pivot); this returns the one with the smaller pivot label.
std::optional<HoleAnalysis> analyze_hole(const OrientedGraph& g, const Hole& h);
// Every reading of the hole, by pivot label: none, one, or two for a C4.
std::vector<HoleAnalysis> hole_readings(const OrientedGraph& g, const Hole& h);

struct StarCutset {
  VertexId center;
  VertexSet cutset;
  std::vector<VertexSet> components;
};

// Centers in label order.
std::vector<StarCutset> full_in_star_cutsets(const OrientedGraph& g);
std::vector<StarCutset> full_star_cutsets(const Graph& g);

inline constexpr std::size_t kDefaultStarCutsetBound = 12;

struct StarCutsetSearch {
  enum class Status { Found, None, BoundExceeded };
  Status status = Status::None;
  std::optional<StarCutset> witness;
  // Centers whose neighbourhood was too large to enumerate.
  VertexSet skipped;
};

StarCutsetSearch star_cutsets(const Graph& g, std::size_t bound = kDefaultStarCutsetBound);

struct DecompositionNode {
  enum class Kind { Deg1, Cutset, Chandelier, Leaf, Failure };
  Kind kind = Kind::Leaf;
  VertexSet vertices;
  // deg1: removed vertex; cutset: center; chandelier: pivot.
  VertexId center;
  VertexId bottom;  // chandelier only
  VertexSet cutset;
  std::vector<DecompositionNode> children;
};

std::string to_string(DecompositionNode::Kind k);

// Recursion on a cutset node goes into G[C + N-[v]] for every component C
// of G - N-[v], in component order.
DecompositionNode decompose(const OrientedGraph& g);
bool has_failure(const DecompositionNode& n);
std::string serialize(const DecompositionNode& n);

bool is_luxury_chandelier(const Graph& g);
// Connected graph whose vertices can be ordered as a path on at most four
// vertices.
bool is_induced_p4_subgraph(const Graph& g);

struct FilterResult {
  bool passes = true;
  // Connected induced subgraph with no full star cutset that is neither a
  // luxury chandelier nor a subgraph of P4.
  std::optional<Graph> witness;
};

FilterResult chalopin_filter(const Graph& g);

}  // namespace burling

#endif  // BURLING_STRUCTURE_HPP_
