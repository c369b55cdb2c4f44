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

#include "burling/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace burling {

namespace {

VertexSet closed_in_neighborhood(const OrientedGraph& g, const VertexId& v) {
  VertexSet s = g.in_neighbors(v);
  s.insert(v);
  return s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexId& v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

// Forest test on the underlying graph: edges = vertices - components.
bool is_forest(const Graph& g) {
  return g.num_edges() + connected_components(g).size() == g.num_vertices();
}

bool is_tree(const Graph& g) {
  return g.num_vertices() > 0 && g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

std::string join(const VertexSet& s) {
  std::string out;
  for (const auto& v : s) {
    if (!out.empty()) out += ' ';
    out += v;
  }
  return out;
}

}  // namespace

TopSetReport top_set(const Derivation& d) {
  require_valid(d);
  TopSetReport r;
  for (const auto& v : d.kept) {
    for (const auto& a : d.tree.path_from_root(v)) {
      if (d.kept.count(a)) {
        r.top_ancestor[v] = a;
        break;
      }
    }
    if (r.top_ancestor.at(v) == v) r.top_set.insert(v);
  }
  OrientedGraph h = induced_subgraph(derive(d), r.top_set);
  r.pivots = h.sinks();
  r.antennas = h.sources();
  return r;
}

std::optional<Arc> check_top_ancestor_dichotomy(const OrientedGraph& g, const TopSetReport& r) {
  for (const auto& [u, v] : g.arcs()) {
    auto iu = r.top_ancestor.find(u);
    auto iv = r.top_ancestor.find(v);
    if (iu == r.top_ancestor.end() || iv == r.top_ancestor.end()) return Arc{u, v};
    const VertexId& u1 = iu->second;
    const VertexId& v1 = iv->second;
    bool first = u1 == v1 && u1 != u && v1 != v;
    bool second = u == u1 && g.has_vertex(v1) && g.has_arc(u, v1);
    if (!first && !second) return Arc{u, v};
  }
  return std::nullopt;
}

std::optional<Arc> check_top_ancestor_dichotomy(const Derivation& d) {
  return check_top_ancestor_dichotomy(derive(d), top_set(d));
}

bool is_in_forest(const OrientedGraph& g) {
  for (const auto& v : g.vertices()) {
    if (g.out_degree(v) > 1) return false;
  }
  return is_forest(underlying(g));
}

bool is_in_tree(const OrientedGraph& g) {
  return g.num_vertices() > 0 && is_in_forest(g) && is_connected(underlying(g));
}

bool is_in_star(const OrientedGraph& g) {
  if (!is_in_tree(g)) return false;
  const VertexId sink = *g.sinks().begin();
  return g.in_degree(sink) + 1 == g.num_vertices();
}

namespace {

// Bottom of the chandelier with pivot v, if v qualifies.
std::optional<VertexId> chandelier_bottom(const OrientedGraph& g, const VertexId& v) {
  if (g.out_degree(v) != 0) return std::nullopt;
  OrientedGraph h = remove_vertices(g, {v});
  if (!is_in_tree(h)) return std::nullopt;
  VertexSet leaves;
  for (const auto& u : h.vertices()) {
    if (h.in_degree(u) == 0 && h.out_degree(u) == 1) leaves.insert(u);
  }
  if (leaves.size() < 2 || leaves != g.in_neighbors(v)) return std::nullopt;
  return *h.sinks().begin();
}

}  // namespace

std::optional<ChandelierWitness> oriented_chandelier(const OrientedGraph& g) {
  if (g.num_vertices() < 4) return std::nullopt;
  for (const auto& v : g.vertex_set()) {
    if (auto b = chandelier_bottom(g, v)) return ChandelierWitness{v, *b};
  }
  return std::nullopt;
}

std::vector<HoleAnalysis> hole_readings(const OrientedGraph& g, const Hole& h) {
  if (!is_hole(underlying(g), h.cycle)) throw Error("not a hole of the graph");
  VertexSet vs(h.cycle.begin(), h.cycle.end());
  OrientedGraph sub = induced_subgraph(g, vs);
  std::vector<HoleAnalysis> out;
  for (const auto& v : vs) {
    auto b = chandelier_bottom(sub, v);
    if (!b) continue;
    HoleAnalysis a;
    a.pivot = v;
    a.bottom = *b;
    const VertexSet& ants = sub.in_neighbors(v);
    a.antennas = {*ants.begin(), *ants.rbegin()};
    for (const auto& w : vs) {
      if (w != v && !ants.count(w)) a.subordinate.insert(w);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::optional<HoleAnalysis> analyze_hole(const OrientedGraph& g, const Hole& h) {
  auto all = hole_readings(g, h);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<StarCutset> full_in_star_cutsets(const OrientedGraph& g) {
  std::vector<StarCutset> out;
  const Graph u = underlying(g);
  for (const auto& v : g.vertex_set()) {
    VertexSet s = closed_in_neighborhood(g, v);
    auto comps = connected_components(remove_vertices(u, s));
    if (comps.size() >= 2) out.push_back({v, std::move(s), std::move(comps)});
  }
  return out;
}

std::vector<StarCutset> full_star_cutsets(const Graph& g) {
  std::vector<StarCutset> out;
  for (const auto& v : g.vertex_set()) {
    VertexSet s = closed_neighborhood(g, v);
    auto comps = connected_components(remove_vertices(g, s));
    if (comps.size() >= 2) out.push_back({v, std::move(s), std::move(comps)});
  }
  return out;
}

StarCutsetSearch star_cutsets(const Graph& g, std::size_t bound) {
  StarCutsetSearch r;
  for (const auto& v : g.vertex_set()) {
    const VertexSet& nb = g.neighbors(v);
    if (nb.size() > bound) {
      r.skipped.insert(v);
      continue;
    }
    std::vector<VertexId> nbs(nb.begin(), nb.end());
    // Full neighbourhood first, then every smaller subset.
    const std::uint64_t full = (std::uint64_t{1} << nbs.size()) - 1;
    for (std::uint64_t m = full + 1; m-- > 0;) {
      VertexSet s{v};
      for (std::size_t i = 0; i < nbs.size(); ++i) {
        if (m >> i & 1) s.insert(nbs[i]);
      }
      auto comps = connected_components(remove_vertices(g, s));
      if (comps.size() >= 2) {
        r.status = StarCutsetSearch::Status::Found;
        r.witness = StarCutset{v, std::move(s), std::move(comps)};
        return r;
      }
    }
  }
  r.status = r.skipped.empty() ? StarCutsetSearch::Status::None
                               : StarCutsetSearch::Status::BoundExceeded;
  return r;
}

std::string to_string(DecompositionNode::Kind k) {
  switch (k) {
    case DecompositionNode::Kind::Deg1:
      return "deg1";
    case DecompositionNode::Kind::Cutset:
      return "cutset";
    case DecompositionNode::Kind::Chandelier:
      return "chandelier";
    case DecompositionNode::Kind::Leaf:
      return "leaf";
    case DecompositionNode::Kind::Failure:
      return "failure";
  }
  return "?";
}

DecompositionNode decompose(const OrientedGraph& g) {
  using Kind = DecompositionNode::Kind;
  DecompositionNode n;
  n.vertices = g.vertex_set();
  if (g.num_vertices() <= 1) {
    n.kind = Kind::Leaf;
    return n;
  }
  if (auto w = oriented_chandelier(g)) {
    n.kind = Kind::Chandelier;
    n.center = w->pivot;
    n.bottom = w->bottom;
    return n;
  }
  for (const auto& v : n.vertices) {
    if (g.degree(v) <= 1) {
      n.kind = Kind::Deg1;
      n.center = v;
      n.children.push_back(decompose(remove_vertices(g, {v})));
      return n;
    }
  }
  auto cuts = full_in_star_cutsets(g);
  if (cuts.empty()) {
    n.kind = Kind::Failure;
    return n;
  }
  const StarCutset& c = cuts.front();
  n.kind = Kind::Cutset;
  n.center = c.center;
  n.cutset = c.cutset;
  for (const auto& comp : c.components) {
    VertexSet block = comp;
    block.insert(c.cutset.begin(), c.cutset.end());
    n.children.push_back(decompose(induced_subgraph(g, block)));
  }
  return n;
}

bool has_failure(const DecompositionNode& n) {
  if (n.kind == DecompositionNode::Kind::Failure) return true;
  return std::any_of(n.children.begin(), n.children.end(),
                     [](const DecompositionNode& c) { return has_failure(c); });
}

namespace {

void write_node(std::ostringstream& out, const DecompositionNode& n, const std::string& indent,
                bool item) {
  using Kind = DecompositionNode::Kind;
  std::string first = item ? indent.substr(0, indent.size() - 2) + "- " : indent;
  out << first << "kind: " << to_string(n.kind) << '\n';
  out << indent << "vertices: " << join(n.vertices) << '\n';
  switch (n.kind) {
    case Kind::Deg1:
      out << indent << "vertex: " << n.center << '\n';
      break;
    case Kind::Cutset:
      out << indent << "center: " << n.center << '\n';
      out << indent << "cutset: " << join(n.cutset) << '\n';
      break;
    case Kind::Chandelier:
      out << indent << "pivot: " << n.center << '\n';
      out << indent << "bottom: " << n.bottom << '\n';
      break;
    case Kind::Leaf:
    case Kind::Failure:
      break;
  }
  if (!n.children.empty()) {
    out << indent << "children:\n";
    for (const auto& c : n.children) write_node(out, c, indent + "    ", true);
  }
}

}  // namespace

std::string serialize(const DecompositionNode& n) {
  std::ostringstream out;
  write_node(out, n, "", false);
  return out.str();
}

bool is_luxury_chandelier(const Graph& g) {
  for (const auto& v : g.vertex_set()) {
    Graph h = remove_vertices(g, {v});
    if (h.num_vertices() < 2 || !is_tree(h)) continue;
    VertexSet leaves;
    for (const auto& u : h.vertices()) {
      if (h.degree(u) == 1) leaves.insert(u);
    }
    if (leaves != g.neighbors(v)) continue;
    bool luxury = std::all_of(leaves.begin(), leaves.end(), [&](const VertexId& l) {
      return h.degree(*h.neighbors(l).begin()) == 2;
    });
    if (luxury) return true;
  }
  return false;
}

bool is_induced_p4_subgraph(const Graph& g) {
  auto comps = connected_components(g);
  std::size_t room = 0;
  for (const auto& c : comps) {
    Graph h = induced_subgraph(g, c);
    if (!is_tree(h)) return false;
    for (const auto& v : h.vertices()) {
      if (h.degree(v) > 2) return false;
    }
    room += c.size();
  }
  if (!comps.empty()) room += comps.size() - 1;
  return room <= 4;
}

FilterResult chalopin_filter(const Graph& g) {
  std::set<VertexSet> seen;
  std::optional<Graph> witness;
  // Every connected piece examined is an induced subgraph of g, so a
  // failing piece refutes g.
  auto visit = [&](auto&& self, const Graph& h) -> void {
    for (const auto& comp : connected_components(h)) {
      if (witness) return;
      if (!seen.insert(comp).second) continue;
      Graph piece = induced_subgraph(h, comp);
      if (piece.num_vertices() <= 1 || is_induced_p4_subgraph(piece)) continue;
      auto cuts = full_star_cutsets(piece);
      if (cuts.empty()) {
        if (!is_luxury_chandelier(piece)) witness = piece;
        continue;
      }
      const StarCutset& c = cuts.front();
      for (const auto& part : c.components) {
        self(self, induced_subgraph(piece, part));
        VertexSet block = part;
        block.insert(c.cutset.begin(), c.cutset.end());
        self(self, induced_subgraph(piece, block));
      }
    }
  };
  visit(visit, g);
  FilterResult r;
  r.passes = !witness;
  r.witness = std::move(witness);
  return r;
}

}  // namespace burling
