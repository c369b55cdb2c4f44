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

#include "burling/graph.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "burling/bitgraph.hpp"

namespace burling {

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

bool is_valid_label(std::string_view label) {
  if (label.empty() || label == "vertex") return false;
  for (char c : label) {
    if (c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
      return false;
    }
  }
  return true;
}

namespace {

const VertexSet kEmptySet;

std::vector<VertexId> dedupe_vertices(std::vector<VertexId> vertices) {
  std::vector<VertexId> out;
  VertexSet seen;
  for (auto& v : vertices) {
    if (!is_valid_label(v)) throw Error("invalid vertex label '" + v + "'");
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

// --------------------------------------------------------------------- Graph

Graph::Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges)
    : vertices_(dedupe_vertices(std::move(vertices))) {
  for (const auto& v : vertices_) adjacency_[v];
  for (const auto& [a, b] : edges) {
    if (a == b) throw Error("loop at vertex '" + a + "'");
    if (!adjacency_.count(a) || !adjacency_.count(b)) {
      throw Error("edge " + a + " " + b + " has an undeclared endpoint");
    }
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    if (!edges_.insert(e).second) throw Error("duplicate edge " + e.first + " " + e.second);
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
  }
}

VertexSet Graph::vertex_set() const { return VertexSet(vertices_.begin(), vertices_.end()); }

bool Graph::has_vertex(const VertexId& v) const { return adjacency_.count(v) != 0; }

bool Graph::has_edge(const VertexId& u, const VertexId& v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.count(v) != 0;
}

const VertexSet& Graph::neighbors(const VertexId& v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.edges_ == b.edges_ && a.vertex_set() == b.vertex_set();
}

// ------------------------------------------------------------- OrientedGraph

OrientedGraph::OrientedGraph(std::vector<VertexId> vertices, const std::vector<Arc>& arcs)
    : vertices_(dedupe_vertices(std::move(vertices))) {
  for (const auto& v : vertices_) adjacency_[v];
  for (const auto& [a, b] : arcs) {
    if (a == b) throw Error("loop at vertex '" + a + "'");
    if (!adjacency_.count(a) || !adjacency_.count(b)) {
      throw Error("arc " + a + " " + b + " has an undeclared endpoint");
    }
    if (arcs_.count({b, a})) throw Error("both-direction arc pair " + a + " " + b);
    if (!arcs_.insert({a, b}).second) throw Error("duplicate arc " + a + " " + b);
    adjacency_[a].out.insert(b);
    adjacency_[b].in.insert(a);
  }
}

VertexSet OrientedGraph::vertex_set() const {
  return VertexSet(vertices_.begin(), vertices_.end());
}

bool OrientedGraph::has_vertex(const VertexId& v) const { return adjacency_.count(v) != 0; }

bool OrientedGraph::has_arc(const VertexId& u, const VertexId& v) const {
  return arcs_.count({u, v}) != 0;
}

const OrientedGraph::Adjacency& OrientedGraph::adjacency(const VertexId& v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

const VertexSet& OrientedGraph::out_neighbors(const VertexId& v) const { return adjacency(v).out; }
const VertexSet& OrientedGraph::in_neighbors(const VertexId& v) const { return adjacency(v).in; }

VertexSet OrientedGraph::sources() const {
  VertexSet s;
  for (const auto& [v, a] : adjacency_) {
    if (a.in.empty()) s.insert(v);
  }
  return s;
}

VertexSet OrientedGraph::sinks() const {
  VertexSet s;
  for (const auto& [v, a] : adjacency_) {
    if (a.out.empty()) s.insert(v);
  }
  return s;
}

bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
  return a.arcs_ == b.arcs_ && a.vertex_set() == b.vertex_set();
}

// ------------------------------------------------------------------- queries

DegreeProfile degree_profile(const OrientedGraph& g, const VertexId& v) {
  return {g.in_degree(v), g.out_degree(v)};
}

Graph underlying(const OrientedGraph& g) {
  return Graph(g.vertices(), std::vector<Edge>(g.arcs().begin(), g.arcs().end()));
}

namespace {

void check_known(const VertexSet& keep, const VertexSet& all) {
  for (const auto& v : keep) {
    if (!all.count(v)) throw Error("unknown vertex '" + v + "'");
  }
}

std::vector<VertexId> filter_order(const std::vector<VertexId>& order, const VertexSet& keep) {
  std::vector<VertexId> out;
  for (const auto& v : order) {
    if (keep.count(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  check_known(keep, g.vertex_set());
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep.count(e.first) && keep.count(e.second)) edges.push_back(e);
  }
  return Graph(filter_order(g.vertices(), keep), edges);
}

OrientedGraph induced_subgraph(const OrientedGraph& g, const VertexSet& keep) {
  check_known(keep, g.vertex_set());
  std::vector<Arc> arcs;
  for (const auto& a : g.arcs()) {
    if (keep.count(a.first) && keep.count(a.second)) arcs.push_back(a);
  }
  return OrientedGraph(filter_order(g.vertices(), keep), arcs);
}

Graph remove_vertices(const Graph& g, const VertexSet& drop) {
  VertexSet keep;
  for (const auto& v : g.vertices()) {
    if (!drop.count(v)) keep.insert(v);
  }
  return induced_subgraph(g, keep);
}

OrientedGraph remove_vertices(const OrientedGraph& g, const VertexSet& drop) {
  VertexSet keep;
  for (const auto& v : g.vertices()) {
    if (!drop.count(v)) keep.insert(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (const auto& start : g.vertex_set()) {
    if (seen.count(start)) continue;
    VertexSet comp{start};
    std::vector<VertexId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& w : g.neighbors(v)) {
        if (seen.insert(w).second) {
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<VertexId> find_triangle(const Graph& g) {
  for (const auto& [a, b] : g.edges()) {
    for (const auto& c : g.neighbors(a)) {
      if (c > b && g.has_edge(b, c)) return {a, b, c};
    }
  }
  return {};
}

// --------------------------------------------------------------------- holes

Hole canonical_hole(std::vector<VertexId> cycle) {
  if (cycle.empty()) return {};
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return {std::move(cycle)};
}

bool is_hole(const Graph& g, const std::vector<VertexId>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  VertexSet distinct(cycle.begin(), cycle.end());
  if (distinct.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_vertex(cycle[i])) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

std::vector<Hole> enumerate_holes(const Graph& g, std::size_t budget, std::size_t max_holes) {
  if (g.num_vertices() > budget) {
    throw ResourceError("hole enumeration budget exceeded: " + std::to_string(g.num_vertices()) +
                        " vertices > " + std::to_string(budget));
  }
  BitGraph bits = to_bits(g);
  std::vector<Hole> out;
  for (const auto& cycle : holes_indexed(bits, max_holes)) {
    Hole h;
    for (int i : cycle) h.cycle.push_back(bits.labels[i]);
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------- text format

namespace {

std::vector<std::string_view> split_single_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(' ', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                   : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  std::optional<bool> directed;
  std::vector<VertexId> vertices;
  VertexSet declared;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::set<std::pair<VertexId, VertexId>> seen;

  auto declare = [&](std::string_view label, std::size_t line_no) {
    if (!is_valid_label(label)) {
      throw ParseError("invalid vertex label '" + std::string(label) + "'", line_no);
    }
    VertexId v(label);
    if (declared.insert(v).second) vertices.push_back(v);
    return v;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!directed) {
      if (line == "directed") {
        directed = true;
      } else if (line == "undirected") {
        directed = false;
      } else {
        throw ParseError("malformed header: expected 'directed' or 'undirected'", line_no);
      }
    } else {
      auto tokens = split_single_spaces(line);
      if (tokens.size() != 2) {
        throw ParseError("expected '<u> <v>' or 'vertex <u>'", line_no);
      }
      if (tokens[0] == "vertex") {
        declare(tokens[1], line_no);
      } else {
        VertexId u = declare(tokens[0], line_no);
        VertexId v = declare(tokens[1], line_no);
        if (u == v) throw ParseError("loop at vertex '" + u + "'", line_no);
        if (*directed) {
          if (seen.count({v, u})) throw ParseError("both-direction arc pair " + u + " " + v, line_no);
          if (!seen.insert({u, v}).second) throw ParseError("duplicate arc " + u + " " + v, line_no);
        } else {
          auto key = u < v ? std::pair{u, v} : std::pair{v, u};
          if (!seen.insert(key).second) throw ParseError("duplicate edge " + u + " " + v, line_no);
        }
        pairs.emplace_back(std::move(u), std::move(v));
      }
    }
    if (end == text.size()) break;
  }
  if (!directed) throw ParseError("malformed header: missing 'directed' or 'undirected'", 0);
  if (*directed) return OrientedGraph(std::move(vertices), pairs);
  return Graph(std::move(vertices), pairs);
}

namespace {

template <typename G, typename Pairs>
std::string serialize_impl(const G& g, const Pairs& pairs, const char* header) {
  VertexSet touched;
  for (const auto& [a, b] : pairs) {
    touched.insert(a);
    touched.insert(b);
  }
  std::ostringstream os;
  os << header << '\n';
  for (const auto& v : g.vertex_set()) {
    if (!touched.count(v)) os << "vertex " << v << '\n';
  }
  // std::set iteration is already lexicographic on (first, second).
  for (const auto& [a, b] : pairs) os << a << ' ' << b << '\n';
  return os.str();
}

}  // namespace

std::string serialize(const Graph& g) { return serialize_impl(g, g.edges(), "undirected"); }
std::string serialize(const OrientedGraph& g) { return serialize_impl(g, g.arcs(), "directed"); }
std::string serialize(const AnyGraph& g) {
  return std::visit([](const auto& x) { return serialize(x); }, g);
}

// ------------------------------------------------------------------ BitGraph

int BitGraph::index_of(const VertexId& v) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), v);
  if (it == labels.end() || *it != v) throw Error("unknown vertex '" + v + "'");
  return static_cast<int>(it - labels.begin());
}

Mask BitGraph::mask_of(const VertexSet& vs) const {
  Mask m = 0;
  for (const auto& v : vs) m |= bit(index_of(v));
  return m;
}

VertexSet BitGraph::labels_of(Mask m) const {
  VertexSet out;
  for_each_bit(m, [&](int i) { out.insert(labels[i]); });
  return out;
}

namespace {

BitGraph empty_bits(const VertexSet& vs, bool directed) {
  if (vs.size() > static_cast<std::size_t>(kMaxBitVertices)) {
    throw ResourceError("graph has more than 64 vertices");
  }
  BitGraph b;
  b.n = static_cast<int>(vs.size());
  b.labels.assign(vs.begin(), vs.end());
  b.out.assign(b.n, 0);
  b.in.assign(b.n, 0);
  b.adj.assign(b.n, 0);
  b.directed = directed;
  return b;
}

}  // namespace

BitGraph to_bits(const Graph& g) {
  BitGraph b = empty_bits(g.vertex_set(), false);
  for (const auto& [x, y] : g.edges()) {
    int i = b.index_of(x), j = b.index_of(y);
    b.adj[i] |= bit(j);
    b.adj[j] |= bit(i);
  }
  b.out = b.adj;
  b.in = b.adj;
  return b;
}

BitGraph to_bits(const OrientedGraph& g) {
  BitGraph b = empty_bits(g.vertex_set(), true);
  for (const auto& [x, y] : g.arcs()) {
    int i = b.index_of(x), j = b.index_of(y);
    b.out[i] |= bit(j);
    b.in[j] |= bit(i);
    b.adj[i] |= bit(j);
    b.adj[j] |= bit(i);
  }
  return b;
}

std::vector<Mask> components(const BitGraph& g, Mask within) {
  std::vector<Mask> out;
  Mask left = within;
  while (left != 0) {
    Mask comp = bit(lowest(left));
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.adj[v]; });
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

namespace {

// Extends the induced path `path` (path[0] is the smallest vertex of any
// hole reported from here). `interior` holds path[1..] except the last.
void extend_holes(const BitGraph& g, std::vector<int>& path, Mask on_path, Mask interior_nbrs,
                  std::vector<std::vector<int>>& out, std::size_t max_holes) {
  const int start = path.front();
  const int last = path.back();
  // Candidates: larger than start, adjacent to last, not adjacent to any
  // interior path vertex, not on the path.
  Mask above = g.all() & ~(bit(start + 1) - 1);
  Mask cand = g.adj[last] & above & ~on_path & ~interior_nbrs;
  for_each_bit(cand, [&](int x) {
    if (g.adj[x] & bit(start)) {
      // Closing vertex: it must be the last one, and the path must give a
      // cycle of length >= 4 oriented towards the smaller neighbour.
      if (path.size() >= 3 && path[1] < x) {
        path.push_back(x);
        out.push_back(path);
        path.pop_back();
        if (out.size() > max_holes) {
          throw ResourceError("hole cap exceeded: more than " + std::to_string(max_holes) +
                              " holes");
        }
      }
      return;
    }
    path.push_back(x);
    Mask new_interior = path.size() > 2 ? interior_nbrs | g.adj[last] : interior_nbrs;
    extend_holes(g, path, on_path | bit(x), new_interior, out, max_holes);
    path.pop_back();
  });
}

}  // namespace

std::vector<std::vector<int>> holes_indexed(const BitGraph& g, std::size_t max_holes) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    Mask above = g.all() & ~(bit(s + 1) - 1);
    for_each_bit(g.adj[s] & above, [&](int p1) {
      std::vector<int> path{s, p1};
      extend_holes(g, path, bit(s) | bit(p1), 0, out, max_holes);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace burling
