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

// Deterministic constructors for the standard families and the figure
// catalogue (see docs/figures.md for labels and parameters).

#ifndef BURLING_GENERATORS_HPP_
#define BURLING_GENERATORS_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "burling/graph.hpp"
#include "burling/tree.hpp"

namespace burling {

// `parents[i]` is the parent index of tree vertex t<i>; exactly one entry
// (the sink) is -1. Leaves send an arc to the extra vertex `p`.
OrientedGraph gen_chandelier(const std::vector<int>& parents);
// Underlying graph of the chandelier; additionally every leaf's neighbour
// must have degree two in the tree.
Graph gen_luxury_chandelier(const std::vector<int>& parents);

// Rim r0..r<n-1>, centre c adjacent to the listed rim positions.
Graph gen_wheel(int rim, const std::vector<int>& spokes);
// Apexes u and v joined by paths with the given numbers of edges.
Graph gen_theta(int l1, int l2, int l3);
// Core hole c0..c<k-1>; the edge c<i>c<i+1> closes a petal hole through a
// private path with petal_lengths[i] edges.
Graph gen_flower(int core, const std::vector<int>& petal_lengths);
// Branch vertices a, b, c, d; lengths are the numbers of edges of the paths
// replacing ab, ac, ad, bc, bd, cd.
Graph gen_k4_subdivision(const std::array<int, 6>& lengths);

using FigureInstance = std::variant<Graph, OrientedGraph, Derivation>;

std::vector<std::string> figure_names();
FigureInstance gen_figure(const std::string& name);

// Random valid derivation with between 1 and `max_tree_vertices` tree
// vertices (labels t0, t1, ...). Uses only the raw engine output so runs are
// reproducible across standard libraries.
Derivation random_derivation(std::mt19937_64& rng, int max_tree_vertices);

// Serialized form of any generator output.
std::string serialize(const FigureInstance& f);

}  // namespace burling

#endif  // BURLING_GENERATORS_HPP_
