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

#include "burling/recognition.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "burling/bitgraph.hpp"
#include "burling/structure.hpp"

namespace burling {

namespace {

struct IndexedHole {
  std::vector<int> cycle;
  Mask mask = 0;
};

std::vector<IndexedHole> indexed_holes(const BitGraph& b, std::size_t hole_budget,
                                       std::size_t hole_cap) {
  if (static_cast<std::size_t>(b.n) > hole_budget) {
    throw ResourceError("hole enumeration budget exceeded: " + std::to_string(b.n) +
                        " vertices > " + std::to_string(hole_budget));
  }
  std::vector<IndexedHole> out;
  for (auto& c : holes_indexed(b, hole_cap)) {
    IndexedHole h;
    for (int i : c) h.mask |= bit(i);
    h.cycle = std::move(c);
    out.push_back(std::move(h));
  }
  return out;
}

Hole to_hole(const BitGraph& b, const std::vector<int>& cycle) {
  std::vector<VertexId> labels;
  for (int i : cycle) labels.push_back(b.labels[i]);
  return canonical_hole(std::move(labels));
}

// Some vertex of `a` has a neighbour in `c`.
bool touches(const BitGraph& b, Mask a, Mask c) {
  bool hit = false;
  for_each_bit(a, [&](int v) { hit = hit || (b.adj[v] & c) != 0; });
  return hit;
}

// Walks the cycle from `from` to `to`, leaving `from` away from `avoid`.
std::vector<int> cycle_segment(const std::vector<int>& cyc, int from, int to, Mask avoid) {
  const std::size_t k = cyc.size();
  std::size_t pos = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), from) - cyc.begin());
  std::size_t step = (avoid & bit(cyc[(pos + 1) % k])) ? k - 1 : 1;
  std::vector<int> out{from};
  while (out.back() != to) {
    pos = (pos + step) % k;
    out.push_back(cyc[pos]);
  }
  return out;
}

// The possible chandelier readings of a hole. Only a C4 has two: either
// sink may be the pivot.
struct HoleRoles {
  std::vector<int> pivots;
  std::vector<Mask> subordinate;
  bool chandelier() const { return !pivots.empty(); }
  // Subordinate in every reading.
  Mask always_subordinate() const {
    Mask m = ~Mask{0};
    for (Mask s : subordinate) m &= s;
    return pivots.empty() ? 0 : m;
  }
};

HoleRoles roles_of(const OrientedGraph& g, const BitGraph& b, const Hole& h) {
  HoleRoles r;
  for (const auto& a : hole_readings(g, h)) {
    r.pivots.push_back(b.index_of(a.pivot));
    r.subordinate.push_back(b.mask_of(a.subordinate));
  }
  return r;
}

Edge edge_key(const VertexId& a, const VertexId& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::size_t induced_edge_count(const Graph& g, const VertexSet& vs) {
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges()) count += vs.count(u) && vs.count(v);
  return count;
}

}  // namespace

std::string to_string(OrientationViolation::Kind k) {
  switch (k) {
    case OrientationViolation::Kind::Hole: return "hole";
    case OrientationViolation::Kind::Dumbbell: return "dumbbell";
    case OrientationViolation::Kind::Domino: return "domino";
    case OrientationViolation::Kind::Theta: return "theta";
  }
  return "?";
}

std::string to_string(Verdict::Reason r) {
  switch (r) {
    case Verdict::Reason::None: return "none";
    case Verdict::Reason::Triangle: return "triangle";
    case Verdict::Reason::Wheel: return "wheel";
    case Verdict::Reason::Flower: return "flower";
    case Verdict::Reason::FilterFailure: return "filter";
    case Verdict::Reason::OrientationConstraint: return "orientation";
    case Verdict::Reason::Exhausted: return "exhausted";
  }
  return "?";
}

std::string to_string(K4Class c) {
  switch (c) {
    case K4Class::Burling: return "burling";
    case K4Class::NotBurling: return "not_burling";
    case K4Class::NotAK4Subdivision: return "not_a_k4_subdivision";
  }
  return "?";
}

// ----------------------------------------------------------------- detectors

std::optional<WheelWitness> find_wheel(const Graph& g, std::size_t hole_budget,
                                       std::size_t hole_cap) {
  BitGraph b = to_bits(g);
  for (const auto& h : indexed_holes(b, hole_budget, hole_cap)) {
    Mask outside = b.all() & ~h.mask;
    for (int c = 0; c < b.n; ++c) {
      if ((outside & bit(c)) && popcount(b.adj[c] & h.mask) >= 3) {
        return WheelWitness{to_hole(b, h.cycle), b.labels[c]};
      }
    }
  }
  return std::nullopt;
}

std::optional<FlowerWitness> find_flower(const Graph& g, std::size_t hole_budget,
                                         std::size_t hole_cap) {
  BitGraph b = to_bits(g);
  auto holes = indexed_holes(b, hole_budget, hole_cap);
  for (const auto& core : holes) {
    const std::size_t k = core.cycle.size();
    std::vector<Mask> edge(k);
    std::vector<std::vector<std::size_t>> candidates(k);
    bool viable = true;
    for (std::size_t i = 0; i < k && viable; ++i) {
      edge[i] = bit(core.cycle[i]) | bit(core.cycle[(i + 1) % k]);
      for (std::size_t j = 0; j < holes.size(); ++j) {
        if ((holes[j].mask & core.mask) != edge[i]) continue;
        if (touches(b, holes[j].mask & ~edge[i], core.mask & ~edge[i])) continue;
        candidates[i].push_back(j);
      }
      viable = !candidates[i].empty();
    }
    if (!viable) continue;

    std::vector<std::size_t> chosen(k);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
      if (i == k) return true;
      for (std::size_t j : candidates[i]) {
        const Mask m = holes[j].mask;
        bool ok = true;
        for (std::size_t p = 0; p < i && ok; ++p) {
          const Mask q = holes[chosen[p]].mask;
          ok = (m & q) == (edge[i] & edge[p]) && !touches(b, m & ~edge[i], q & ~edge[p]);
        }
        if (!ok) continue;
        chosen[i] = j;
        if (extend(i + 1)) return true;
      }
      return false;
    };
    if (!extend(0)) continue;

    FlowerWitness w;
    w.core = to_hole(b, core.cycle);
    for (std::size_t i = 0; i < k; ++i) {
      w.petals[edge_key(b.labels[core.cycle[i]], b.labels[core.cycle[(i + 1) % k]])] =
          to_hole(b, holes[chosen[i]].cycle);
    }
    return w;
  }
  return std::nullopt;
}

K4Class classify_k4_subdivision(const Graph& g) {
  std::vector<VertexId> branch;
  for (const auto& v : g.vertices()) {
    const std::size_t d = g.degree(v);
    if (d == 3) {
      branch.push_back(v);
    } else if (d != 2) {
      return K4Class::NotAK4Subdivision;
    }
  }
  if (branch.size() != 4) return K4Class::NotAK4Subdivision;

  const VertexSet branch_set(branch.begin(), branch.end());
  std::map<Edge, int> traces;
  std::size_t interior = 0;
  for (const auto& a : branch) {
    for (const auto& first : g.neighbors(a)) {
      VertexId prev = a;
      VertexId cur = first;
      while (!branch_set.count(cur)) {
        const auto& nb = g.neighbors(cur);
        VertexId next = *nb.begin() == prev ? *nb.rbegin() : *nb.begin();
        prev = cur;
        cur = next;
        ++interior;
      }
      if (cur == a) return K4Class::NotAK4Subdivision;
      ++traces[edge_key(a, cur)];
    }
  }
  if (traces.size() != 6) return K4Class::NotAK4Subdivision;
  for (const auto& [e, n] : traces) {
    if (n != 2) return K4Class::NotAK4Subdivision;
  }
  if (interior / 2 + 4 != g.num_vertices()) return K4Class::NotAK4Subdivision;

  std::array<int, 4> p{0, 1, 2, 3};
  do {
    const auto& a = branch[p[0]];
    const auto& bb = branch[p[1]];
    const auto& c = branch[p[2]];
    const auto& d = branch[p[3]];
    if (g.has_edge(a, bb) && g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(bb, c)) {
      return K4Class::Burling;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return K4Class::NotBurling;
}

// ------------------------------------------------------- orientation checks

std::optional<OrientationViolation> orientation_constraints(const OrientedGraph& g,
                                                            std::size_t hole_budget,
                                                            std::size_t hole_cap) {
  using Kind = OrientationViolation::Kind;
  BitGraph b = to_bits(g);
  auto holes = indexed_holes(b, hole_budget, hole_cap);
  const std::size_t h = holes.size();
  std::vector<Hole> named(h);
  std::vector<HoleRoles> roles(h);
  for (std::size_t i = 0; i < h; ++i) {
    named[i] = to_hole(b, holes[i].cycle);
    roles[i] = roles_of(g, b, named[i]);
  }
  auto label = [&](int i) { return b.labels[i]; };

  // Long thetas: two holes meeting in a path with at least two inner vertices.
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j) {
      const Mask shared = holes[i].mask & holes[j].mask;
      if (popcount(shared) < 4) continue;
      std::vector<int> ends;
      int inner_edges = 0;
      for_each_bit(shared, [&](int v) {
        int d = popcount(b.adj[v] & shared);
        inner_edges += d;
        if (d == 1) ends.push_back(v);
      });
      if (ends.size() != 2 || inner_edges / 2 != popcount(shared) - 1) continue;
      const Mask q1 = holes[i].mask & ~shared;
      const Mask q3 = holes[j].mask & ~shared;
      if (popcount(q1) < 2 || popcount(q3) < 2 || touches(b, q1, q3)) continue;
      const int u = ends[0];
      const int v = ends[1];
      const Mask middle = shared & ~(bit(u) | bit(v));
      std::vector<int> third = cycle_segment(holes[i].cycle, u, v, middle);
      std::vector<int> back = cycle_segment(holes[j].cycle, v, u, middle);
      third.insert(third.end(), back.begin() + 1, back.end() - 1);
      Hole h3 = to_hole(b, third);
      // Holes of a long theta have at least six vertices: one reading each.
      std::array<HoleRoles, 3> r{roles[i], roles[j], roles_of(g, b, h3)};
      bool stray = false;
      bool all = true;
      for (const auto& x : r) {
        if (x.chandelier() && x.pivots[0] != u && x.pivots[0] != v) stray = true;
        all = all && x.chandelier();
      }
      bool same = all && r[0].pivots[0] == r[1].pivots[0] && r[1].pivots[0] == r[2].pivots[0];
      if (stray || (all && !same)) {
        return OrientationViolation{Kind::Theta, {named[i], named[j], h3}, {label(u), label(v)}};
      }
    }
  }

  // Dominos: two holes sharing exactly an edge, nothing else between them.
  for (std::size_t i = 0; i < h; ++i) {
    if (!roles[i].chandelier()) continue;
    for (std::size_t j = i + 1; j < h; ++j) {
      if (!roles[j].chandelier()) continue;
      const Mask shared = holes[i].mask & holes[j].mask;
      if (popcount(shared) != 2) continue;
      const int x = lowest(shared);
      const int y = lowest(shared & (shared - 1));
      if (!(b.adj[x] & bit(y))) continue;
      if (touches(b, holes[i].mask & ~shared, holes[j].mask & ~shared)) continue;
      // Fine if some pair of readings satisfies the rule.
      bool fine = false;
      const HoleRoles& ri = roles[i];
      const HoleRoles& rj = roles[j];
      for (std::size_t p = 0; p < ri.pivots.size(); ++p) {
        for (std::size_t q = 0; q < rj.pivots.size(); ++q) {
          for (int z : {x, y}) {
            fine = fine || (ri.pivots[p] == z && (rj.subordinate[q] & bit(z))) ||
                   (rj.pivots[q] == z && (ri.subordinate[p] & bit(z)));
          }
        }
      }
      if (!fine) {
        return OrientationViolation{Kind::Domino, {named[i], named[j]}, {label(x), label(y)}};
      }
    }
  }

  // Dumbbells: two holes joined by an induced path, both ends subordinate.
  for (std::size_t i = 0; i < h; ++i) {
    if (!roles[i].chandelier()) continue;
    const Mask si = roles[i].always_subordinate();
    for (std::size_t j = i + 1; j < h; ++j) {
      if (!roles[j].chandelier()) continue;
      const Mask sj = roles[j].always_subordinate();
      const Mask mi = holes[i].mask;
      const Mask mj = holes[j].mask;
      const Mask shared = mi & mj;
      if (popcount(shared) > 1) continue;
      if (shared != 0) {
        const int x = lowest(shared);
        if ((si & sj & bit(x)) &&
            !touches(b, mi & ~shared, mj & ~shared)) {
          return OrientationViolation{Kind::Dumbbell, {named[i], named[j]}, {label(x)}};
        }
        continue;
      }
      int links = 0;
      for_each_bit(mi, [&](int v) { links += popcount(b.adj[v] & mj); });
      if (links > 1) continue;
      if (links == 1) {
        int x = -1;
        int y = -1;
        for_each_bit(mi, [&](int v) {
          if (b.adj[v] & mj) {
            x = v;
            y = lowest(b.adj[v] & mj);
          }
        });
        if ((si & bit(x)) && (sj & bit(y))) {
          return OrientationViolation{Kind::Dumbbell, {named[i], named[j]}, {label(x), label(y)}};
        }
        continue;
      }
      const Mask both = mi | mj;
      const Mask outside = b.all() & ~both;
      for (int x = 0; x < b.n; ++x) {
        if (!(si & bit(x))) continue;
        for (int y = 0; y < b.n; ++y) {
          if (!(sj & bit(y))) continue;
          const Mask ends = bit(x) | bit(y);
          Mask allowed = 0;
          for_each_bit(outside, [&](int w) {
            if ((b.adj[w] & both & ~ends) == 0) allowed |= bit(w);
          });
          // Breadth-first search from x; parents give a shortest path.
          std::vector<int> parent(b.n, -1);
          Mask seen = bit(x);
          std::vector<int> queue{x};
          for (std::size_t q = 0; q < queue.size() && !(seen & bit(y)); ++q) {
            const int cur = queue[q];
            Mask step = b.adj[cur] & (allowed | bit(y)) & ~seen;
            if (cur == x) step &= allowed;
            for_each_bit(step, [&](int w) {
              parent[w] = cur;
              seen |= bit(w);
              queue.push_back(w);
            });
          }
          if (!(seen & bit(y))) continue;
          std::vector<VertexId> path;
          for (int w = y; w != -1; w = parent[w]) path.push_back(label(w));
          std::reverse(path.begin(), path.end());
          return OrientationViolation{Kind::Dumbbell, {named[i], named[j]}, path};
        }
      }
    }
  }

  for (std::size_t i = 0; i < h; ++i) {
    if (!roles[i].chandelier()) return OrientationViolation{Kind::Hole, {named[i]}, {}};
  }
  return std::nullopt;
}

// ---------------------------------------------------------- witness checks

bool is_wheel_witness(const Graph& g, const WheelWitness& w) {
  if (!is_hole(g, w.rim.cycle) || !g.has_vertex(w.center)) return false;
  int hits = 0;
  for (const auto& r : w.rim.cycle) {
    if (r == w.center) return false;
    hits += g.has_edge(r, w.center);
  }
  return hits >= 3;
}

bool is_flower_witness(const Graph& g, const FlowerWitness& w) {
  const auto& c = w.core.cycle;
  if (!is_hole(g, c) || w.petals.size() != c.size()) return false;
  const VertexSet core(c.begin(), c.end());
  std::vector<std::pair<VertexSet, VertexSet>> parts;  // (edge, petal vertices)
  VertexSet all = core;
  std::size_t edges = c.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Edge e = edge_key(c[i], c[(i + 1) % c.size()]);
    auto it = w.petals.find(e);
    if (it == w.petals.end() || !is_hole(g, it->second.cycle)) return false;
    VertexSet pv(it->second.cycle.begin(), it->second.cycle.end());
    VertexSet meet;
    for (const auto& v : pv) {
      if (core.count(v)) meet.insert(v);
    }
    if (meet != VertexSet{e.first, e.second}) return false;
    parts.push_back({VertexSet{e.first, e.second}, pv});
    all.insert(pv.begin(), pv.end());
    edges += pv.size() - 1;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      VertexSet common;
      VertexSet expected;
      for (const auto& v : parts[i].second) {
        if (parts[j].second.count(v)) common.insert(v);
      }
      for (const auto& v : parts[i].first) {
        if (parts[j].first.count(v)) expected.insert(v);
      }
      if (common != expected) return false;
    }
  }
  return induced_edge_count(g, all) == edges;
}

bool is_violation_witness(const OrientedGraph& g, const OrientationViolation& v) {
  using Kind = OrientationViolation::Kind;
  const Graph u = underlying(g);
  for (const auto& h : v.holes) {
    if (!is_hole(u, h.cycle)) return false;
  }
  std::vector<std::vector<HoleAnalysis>> a;
  std::vector<VertexSet> sets;
  for (const auto& h : v.holes) {
    a.push_back(hole_readings(g, h));
    sets.emplace_back(h.cycle.begin(), h.cycle.end());
  }
  auto unread = [&] {
    return std::any_of(a.begin(), a.end(), [](const auto& r) { return r.empty(); });
  };
  auto meet = [](const VertexSet& x, const VertexSet& y) {
    VertexSet out;
    for (const auto& e : x) {
      if (y.count(e)) out.insert(e);
    }
    return out;
  };

  switch (v.kind) {
    case Kind::Hole:
      return v.holes.size() == 1 && a[0].empty();

    case Kind::Domino: {
      if (v.holes.size() != 2 || v.vertices.size() != 2) return false;
      const auto& x = v.vertices[0];
      const auto& y = v.vertices[1];
      if (!u.has_edge(x, y) || meet(sets[0], sets[1]) != VertexSet{x, y}) return false;
      VertexSet all = sets[0];
      all.insert(sets[1].begin(), sets[1].end());
      if (induced_edge_count(u, all) != sets[0].size() + sets[1].size() - 1) return false;
      if (unread()) return true;
      for (const auto& r0 : a[0]) {
        for (const auto& r1 : a[1]) {
          for (const auto& z : {x, y}) {
            if (r0.pivot == z && r1.subordinate.count(z)) return false;
            if (r1.pivot == z && r0.subordinate.count(z)) return false;
          }
        }
      }
      return true;
    }

    case Kind::Dumbbell: {
      if (v.holes.size() != 2 || v.vertices.empty()) return false;
      const auto& p = v.vertices;
      const VertexSet ps(p.begin(), p.end());
      if (ps.size() != p.size()) return false;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!u.has_edge(p[i], p[i + 1])) return false;
      }
      if (meet(sets[0], ps) != VertexSet{p.front()}) return false;
      if (meet(sets[1], ps) != VertexSet{p.back()}) return false;
      VertexSet ends{p.front()};
      ends = meet(ends, VertexSet{p.back()});
      if (meet(sets[0], sets[1]) != ends) return false;
      VertexSet all = sets[0];
      all.insert(sets[1].begin(), sets[1].end());
      all.insert(ps.begin(), ps.end());
      if (induced_edge_count(u, all) != sets[0].size() + sets[1].size() + p.size() - 1) {
        return false;
      }
      if (unread()) return true;
      auto always = [](const std::vector<HoleAnalysis>& rs, const VertexId& x) {
        return std::all_of(rs.begin(), rs.end(),
                           [&](const HoleAnalysis& r) { return r.subordinate.count(x) > 0; });
      };
      return always(a[0], p.front()) && always(a[1], p.back());
    }

    case Kind::Theta: {
      if (v.holes.size() != 3 || v.vertices.size() != 2) return false;
      const auto& x = v.vertices[0];
      const auto& y = v.vertices[1];
      VertexSet all;
      for (const auto& s : sets) all.insert(s.begin(), s.end());
      Graph t = induced_subgraph(u, all);
      if (!t.has_vertex(x) || !t.has_vertex(y) || t.has_edge(x, y)) return false;
      for (const auto& w : t.vertices()) {
        if (t.degree(w) != ((w == x || w == y) ? 3u : 2u)) return false;
      }
      auto parts = connected_components(remove_vertices(t, {x, y}));
      if (parts.size() != 3) return false;
      for (const auto& q : parts) {
        if (q.size() < 2) return false;
      }
      for (std::size_t i = 0; i < 3; ++i) {
        int missing = 0;
        for (const auto& q : parts) missing += meet(q, sets[i]).empty();
        if (missing != 1 || !sets[i].count(x) || !sets[i].count(y)) return false;
      }
      if (sets[0] == sets[1] || sets[1] == sets[2] || sets[0] == sets[2]) return false;
      if (unread()) return true;
      const auto& p = a[0][0].pivot;
      return !((p == x || p == y) && a[1][0].pivot == p && a[2][0].pivot == p);
    }
  }
  return false;
}

namespace {

bool verify_common(const Graph& u, const Verdict& v) {
  switch (v.reason) {
    case Verdict::Reason::Triangle: {
      const auto& t = v.triangle;
      return t.size() == 3 && t[0] != t[1] && t[1] != t[2] && t[0] != t[2] &&
             u.has_edge(t[0], t[1]) && u.has_edge(t[1], t[2]) && u.has_edge(t[0], t[2]);
    }
    case Verdict::Reason::Wheel:
      return v.wheel && is_wheel_witness(u, *v.wheel);
    case Verdict::Reason::Flower:
      return v.flower && is_flower_witness(u, *v.flower);
    case Verdict::Reason::FilterFailure: {
      if (!v.filter_subgraph) return false;
      const Graph& s = *v.filter_subgraph;
      for (const auto& w : s.vertices()) {
        if (!u.has_vertex(w)) return false;
      }
      return s.num_vertices() > 1 && induced_subgraph(u, s.vertex_set()) == s && is_connected(s) &&
             full_star_cutsets(s).empty() && !is_luxury_chandelier(s) &&
             !is_induced_p4_subgraph(s);
    }
    case Verdict::Reason::Exhausted:
      return true;
    default:
      return false;
  }
}

}  // namespace

bool verify_verdict(const Graph& g, const Verdict& v) {
  if (v.outcome == Verdict::Outcome::Burling) {
    if (!v.derivation || !validate_tree(v.derivation->tree).empty()) return false;
    try {
      return underlying(derive(*v.derivation)) == g;
    } catch (const Error&) {
      return false;
    }
  }
  return v.outcome == Verdict::Outcome::NotBurling && verify_common(g, v);
}

bool verify_verdict(const OrientedGraph& g, const Verdict& v) {
  if (v.outcome == Verdict::Outcome::Burling) {
    return v.derivation && check_derivation(g, *v.derivation);
  }
  if (v.outcome != Verdict::Outcome::NotBurling) return false;
  if (v.reason == Verdict::Reason::OrientationConstraint) {
    return v.violation && is_violation_witness(g, *v.violation);
  }
  return verify_common(underlying(g), v);
}

// -------------------------------------------------------------- the pipeline

namespace {

Verdict refuted(Verdict::Reason r) {
  Verdict v;
  v.outcome = Verdict::Outcome::NotBurling;
  v.reason = r;
  return v;
}

template <typename F>
auto if_affordable(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

Verdict run_pipeline(const Graph& u, const OrientedGraph* oriented, const RecognizeOptions& opts) {
  if (auto t = find_triangle(u); !t.empty()) {
    Verdict v = refuted(Verdict::Reason::Triangle);
    v.triangle = t;
    return v;
  }
  const bool small = u.num_vertices() <= static_cast<std::size_t>(kMaxBitVertices);
  if (small) {
    if (auto w = if_affordable([&] { return find_wheel(u, opts.hole_budget, opts.hole_cap); })) {
      Verdict v = refuted(Verdict::Reason::Wheel);
      v.wheel = std::move(w);
      return v;
    }
    if (auto f = if_affordable([&] { return find_flower(u, opts.hole_budget, opts.hole_cap); })) {
      Verdict v = refuted(Verdict::Reason::Flower);
      v.flower = std::move(f);
      return v;
    }
  }
  if (auto f = chalopin_filter(u); !f.passes) {
    Verdict v = refuted(Verdict::Reason::FilterFailure);
    v.filter_subgraph = std::move(f.witness);
    return v;
  }
  if (oriented && small) {
    if (auto c = if_affordable([&] {
          return orientation_constraints(*oriented, opts.hole_budget, opts.hole_cap);
        })) {
      Verdict v = refuted(Verdict::Reason::OrientationConstraint);
      v.violation = std::move(c);
      return v;
    }
  }
  if (opts.obstructions_only) return Verdict{};
  if (u.num_vertices() > opts.budget) {
    throw ResourceError("exact search budget exceeded: " + std::to_string(u.num_vertices()) +
                        " vertices > " + std::to_string(opts.budget) +
                        " and no obstruction found; raise --budget or use --obstructions-only");
  }
  SearchOptions so;
  so.budget = opts.budget;
  so.threads = opts.threads;
  SequentialSearch s = oriented ? min_sequential(*oriented, so) : min_sequential(u, so);
  Verdict v;
  v.stats = s.stats;
  if (s.depth) {
    v.outcome = Verdict::Outcome::Burling;
    v.nobility = s.depth;
    v.derivation = tree_from_seq(*s.decomposition);
  } else {
    v.outcome = Verdict::Outcome::NotBurling;
    v.reason = Verdict::Reason::Exhausted;
  }
  return v;
}

}  // namespace

Verdict recognize(const Graph& g, const RecognizeOptions& opts) {
  return run_pipeline(g, nullptr, opts);
}

Verdict recognize_oriented(const OrientedGraph& g, const RecognizeOptions& opts) {
  return run_pipeline(underlying(g), &g, opts);
}

// ------------------------------------------------------------- certificates

namespace {

void write_list(std::ostream& os, const std::string& indent, const std::string& key,
                const std::vector<VertexId>& items) {
  os << indent << key << ':';
  for (const auto& x : items) os << ' ' << x;
  os << '\n';
}

}  // namespace

std::string serialize(const Verdict& v) {
  std::ostringstream os;
  os << "cert_version: 1\n";
  switch (v.outcome) {
    case Verdict::Outcome::Burling:
      os << "result: burling\nreason: exact\n";
      if (v.nobility) os << "nobility: " << *v.nobility << '\n';
      if (v.derivation) os << serialize(*v.derivation);
      break;
    case Verdict::Outcome::Undecided:
      os << "result: undecided\nreason: none\n";
      break;
    case Verdict::Outcome::NotBurling:
      os << "result: not_burling\nreason: " << to_string(v.reason) << '\n';
      switch (v.reason) {
        case Verdict::Reason::Triangle:
          os << "witness:\n";
          write_list(os, "  ", "vertices", v.triangle);
          break;
        case Verdict::Reason::Wheel:
          if (v.wheel) {
            os << "witness:\n";
            write_list(os, "  ", "rim", v.wheel->rim.cycle);
            os << "  center: " << v.wheel->center << '\n';
          }
          break;
        case Verdict::Reason::Flower:
          if (v.flower) {
            os << "witness:\n";
            write_list(os, "  ", "core", v.flower->core.cycle);
            os << "  petals:\n";
            for (const auto& [e, p] : v.flower->petals) {
              write_list(os, "    ", e.first + " " + e.second, p.cycle);
            }
          }
          break;
        case Verdict::Reason::FilterFailure:
          if (v.filter_subgraph) {
            os << "witness:\n";
            write_list(os, "  ", "vertices", v.filter_subgraph->vertices());
            os << "  edges:\n";
            for (const auto& [a, b] : v.filter_subgraph->edges()) {
              os << "    " << a << ' ' << b << '\n';
            }
          }
          break;
        case Verdict::Reason::OrientationConstraint:
          if (v.violation) {
            os << "witness:\n";
            os << "  rule: " << to_string(v.violation->kind) << '\n';
            os << "  holes:\n";
            for (const auto& h : v.violation->holes) {
              os << "    -";
              for (const auto& x : h.cycle) os << ' ' << x;
              os << '\n';
            }
            if (!v.violation->vertices.empty()) write_list(os, "  ", "vertices", v.violation->vertices);
          }
          break;
        default:
          break;
      }
      break;
  }
  os << "stats:\n";
  os << "  subsets: " << v.stats.subsets << '\n';
  os << "  candidates: " << v.stats.candidates << '\n';
  return os.str();
}

}  // namespace burling
