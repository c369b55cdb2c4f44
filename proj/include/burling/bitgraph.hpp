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

// Dense bitmask view of a small graph, used by the exponential kernels.
// Vertex i is the i-th label in lexicographic order.

#ifndef BURLING_BITGRAPH_HPP_
#define BURLING_BITGRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "burling/graph.hpp"

namespace burling {

using Mask = std::uint64_t;

inline constexpr int kMaxBitVertices = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

struct BitGraph {
  int n = 0;
  std::vector<VertexId> labels;
  std::vector<Mask> out;  // equals adj for undirected graphs
  std::vector<Mask> in;   // equals adj for undirected graphs
  std::vector<Mask> adj;
  bool directed = false;

  Mask all() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }
  int index_of(const VertexId& v) const;
  Mask mask_of(const VertexSet& vs) const;
  VertexSet labels_of(Mask m) const;
};

// Throw ResourceError above 64 vertices.
BitGraph to_bits(const Graph& g);
BitGraph to_bits(const OrientedGraph& g);

// Connected components of the underlying graph restricted to `within`.
std::vector<Mask> components(const BitGraph& g, Mask within);

// Holes as index sequences in canonical rotation, sorted.
// Throws ResourceError once more than `max_holes` holes are found.
std::vector<std::vector<int>> holes_indexed(const BitGraph& g,
                                            std::size_t max_holes = SIZE_MAX);

}  // namespace burling

#endif  // BURLING_BITGRAPH_HPP_
