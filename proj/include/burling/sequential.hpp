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

// k-sequential decompositions, their correspondence with Burling trees and
// the exact search behind nobility and recognition.

#ifndef BURLING_SEQUENTIAL_HPP_
#define BURLING_SEQUENTIAL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "burling/graph.hpp"
#include "burling/tree.hpp"

namespace burling {

struct SequentialDecomposition {
  // An in-forest.
  OrientedGraph base;
  // Base vertices without an entry have the empty decomposition.
  std::map<VertexId, SequentialDecomposition> children;
  // For a non-sink u with out-neighbour v: a member of the family of
  // children[v]. Missing entries mean the empty set.
  std::map<VertexId, VertexSet> links;
};

bool operator==(const SequentialDecomposition& a, const SequentialDecomposition& b);

// 0 for the empty decomposition.
int depth(const SequentialDecomposition& sd);

// Whether `r` is in the stable-set family of `sd`: empty, or one base
// vertex w plus a member of the family of children[w].
bool in_family(const SequentialDecomposition& sd, const VertexSet& r);

// Throws Error naming the first broken invariant.
void require_valid(const SequentialDecomposition& sd);

// The graph built by the decomposition. Throws Error if it is invalid.
OrientedGraph realize(const SequentialDecomposition& sd);
bool realizes(const OrientedGraph& g, const SequentialDecomposition& sd);

SequentialDecomposition seq_from_tree(const Derivation& d);
// Shadow vertices are labelled `_s<n>`, skipping labels in use.
Derivation tree_from_seq(const SequentialDecomposition& sd);

std::string serialize(const SequentialDecomposition& sd);
SequentialDecomposition parse_sequential(std::string_view text);

inline constexpr std::size_t kDefaultExactBudget = 12;

struct SearchOptions {
  // Largest vertex count accepted by the exact search.
  std::size_t budget = kDefaultExactBudget;
  int threads = 1;
};

struct SearchStats {
  // Distinct vertex subsets solved.
  std::size_t subsets = 0;
  // (base, orientation) candidates evaluated over those subsets.
  std::size_t candidates = 0;
};

struct SequentialSearch {
  // Minimum depth, or nullopt when no decomposition exists.
  std::optional<int> depth;
  std::optional<SequentialDecomposition> decomposition;
  SearchStats stats;
};

// Minimum-depth decomposition of g. The result does not depend on
// `threads`. Throws ResourceError above the budget.
SequentialSearch min_sequential(const OrientedGraph& g, const SearchOptions& opts = {});
// Same, minimised over all orientations of g; the decomposition realizes
// the chosen orientation.
SequentialSearch min_sequential(const Graph& g, const SearchOptions& opts = {});

std::optional<SequentialDecomposition> find_sequential(const OrientedGraph& g, int k,
                                                       const SearchOptions& opts = {});

// nullopt means not Burling.
std::optional<int> nobility_oriented(const OrientedGraph& g, const SearchOptions& opts = {});
std::optional<int> nobility(const Graph& g, const SearchOptions& opts = {});

}  // namespace burling

#endif  // BURLING_SEQUENTIAL_HPP_
