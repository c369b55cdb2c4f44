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

#ifndef BURLING_GRAPH_HPP_
#define BURLING_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace burling {

// Vertices are identified by their label; every canonical order in the
// library is lexicographic on labels.
using VertexId = std::string;
using VertexSet = std::set<VertexId>;

// Edge endpoints are stored with first < second.
using Edge = std::pair<VertexId, VertexId>;
using Arc = std::pair<VertexId, VertexId>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A configured search or enumeration budget would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Returns true when `label` is usable as a vertex label: non-empty, no
// whitespace, no '#', and not the reserved keyword `vertex`.
bool is_valid_label(std::string_view label);

// Undirected simple graph. Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  // Vertices keep the given order (duplicates are ignored); edge endpoints
  // must be declared vertices. Throws Error on loops, duplicate edges or
  // unknown endpoints.
  Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexSet vertex_set() const;
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(const VertexId& v) const;
  bool has_edge(const VertexId& u, const VertexId& v) const;
  const VertexSet& neighbors(const VertexId& v) const;
  std::size_t degree(const VertexId& v) const { return neighbors(v).size(); }

  // Same vertex set and same edges; vertex insertion order is ignored.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<VertexId> vertices_;
  std::map<VertexId, VertexSet> adjacency_;
  std::set<Edge> edges_;
};

// Oriented graph: no loops, and no pair of vertices joined in both directions.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  OrientedGraph(std::vector<VertexId> vertices, const std::vector<Arc>& arcs);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexSet vertex_set() const;
  const std::set<Arc>& arcs() const { return arcs_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }

  bool has_vertex(const VertexId& v) const;
  bool has_arc(const VertexId& u, const VertexId& v) const;
  bool adjacent(const VertexId& u, const VertexId& v) const {
    return has_arc(u, v) || has_arc(v, u);
  }
  const VertexSet& out_neighbors(const VertexId& v) const;
  const VertexSet& in_neighbors(const VertexId& v) const;
  std::size_t out_degree(const VertexId& v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(const VertexId& v) const { return in_neighbors(v).size(); }
  std::size_t degree(const VertexId& v) const { return out_degree(v) + in_degree(v); }

  VertexSet sources() const;
  VertexSet sinks() const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b);

 private:
  struct Adjacency {
    VertexSet out;
    VertexSet in;
  };
  const Adjacency& adjacency(const VertexId& v) const;

  std::vector<VertexId> vertices_;
  std::map<VertexId, Adjacency> adjacency_;
  std::set<Arc> arcs_;
};

struct DegreeProfile {
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

DegreeProfile degree_profile(const OrientedGraph& g, const VertexId& v);

Graph underlying(const OrientedGraph& g);

// Throws Error when `keep` names a vertex outside the graph.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
OrientedGraph induced_subgraph(const OrientedGraph& g, const VertexSet& keep);

// Removes the given vertices (unknown labels are ignored).
Graph remove_vertices(const Graph& g, const VertexSet& drop);
OrientedGraph remove_vertices(const OrientedGraph& g, const VertexSet& drop);

// Chordless cycle of length at least 4, stored in canonical rotation: it
// starts at its smallest label and continues towards the smaller of that
// vertex's two cycle neighbours.
struct Hole {
  std::vector<VertexId> cycle;
  friend auto operator<=>(const Hole&, const Hole&) = default;
};

inline constexpr std::size_t kDefaultHoleBudget = 16;

// Every hole of `g`, each once, sorted. Throws ResourceError when the graph
// has more than `budget` vertices or more than `max_holes` holes.
std::vector<Hole> enumerate_holes(const Graph& g, std::size_t budget = kDefaultHoleBudget,
                                  std::size_t max_holes = SIZE_MAX);

// Rotates/reflects an arbitrary cycle listing into canonical form.
Hole canonical_hole(std::vector<VertexId> cycle);

// True when `cycle` is a chordless cycle of length >= 4 of `g`.
bool is_hole(const Graph& g, const std::vector<VertexId>& cycle);

// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Some triangle of `g` (sorted), or empty when triangle-free.
std::vector<VertexId> find_triangle(const Graph& g);

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   undirected            (or: directed)
//   vertex a              (declares a possibly isolated vertex)
//   a b                   (edge, or arc a -> b)

using AnyGraph = std::variant<Graph, OrientedGraph>;

AnyGraph parse_graph(std::string_view text);
// Isolated vertices first (sorted), then edges/arcs sorted lexicographically.
std::string serialize(const Graph& g);
std::string serialize(const OrientedGraph& g);
std::string serialize(const AnyGraph& g);

}  // namespace burling

#endif  // BURLING_GRAPH_HPP_
