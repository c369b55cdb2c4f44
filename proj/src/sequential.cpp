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

#include "burling/sequential.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "burling/bitgraph.hpp"
#include "burling/structure.hpp"

namespace burling {

namespace {

bool empty(const SequentialDecomposition& sd) { return sd.base.num_vertices() == 0; }

const SequentialDecomposition& child_of(const SequentialDecomposition& sd, const VertexId& v) {
  static const SequentialDecomposition kEmpty;
  auto it = sd.children.find(v);
  return it == sd.children.end() ? kEmpty : it->second;
}

std::optional<VertexId> out_neighbor(const OrientedGraph& base, const VertexId& u) {
  const VertexSet& out = base.out_neighbors(u);
  if (out.empty()) return std::nullopt;
  return *out.begin();
}

void collect(const SequentialDecomposition& sd, std::vector<VertexId>& vs, std::vector<Arc>& arcs) {
  for (const auto& v : sd.base.vertices()) vs.push_back(v);
  for (const auto& a : sd.base.arcs()) arcs.push_back(a);
  for (const auto& [u, r] : sd.links) {
    for (const auto& x : r) arcs.emplace_back(u, x);
  }
  for (const auto& [v, c] : sd.children) collect(c, vs, arcs);
}

}  // namespace

bool operator==(const SequentialDecomposition& a, const SequentialDecomposition& b) {
  if (!(a.base == b.base)) return false;
  auto nonempty_links = [](const SequentialDecomposition& s) {
    std::map<VertexId, VertexSet> out;
    for (const auto& [u, r] : s.links) {
      if (!r.empty()) out.emplace(u, r);
    }
    return out;
  };
  if (nonempty_links(a) != nonempty_links(b)) return false;
  for (const auto& v : a.base.vertices()) {
    if (!(child_of(a, v) == child_of(b, v))) return false;
  }
  return true;
}

int depth(const SequentialDecomposition& sd) {
  if (empty(sd)) return 0;
  int d = 0;
  for (const auto& [v, c] : sd.children) d = std::max(d, depth(c));
  return d + 1;
}

bool in_family(const SequentialDecomposition& sd, const VertexSet& r) {
  if (r.empty()) return true;
  std::optional<VertexId> w;
  VertexSet rest;
  for (const auto& x : r) {
    if (sd.base.has_vertex(x)) {
      if (w) return false;
      w = x;
    } else {
      rest.insert(x);
    }
  }
  if (!w) return false;
  return in_family(child_of(sd, *w), rest);
}

namespace {

void validate(const SequentialDecomposition& sd, VertexSet& seen) {
  if (!is_in_forest(sd.base)) throw Error("base is not an in-forest");
  for (const auto& v : sd.base.vertices()) {
    if (!seen.insert(v).second) throw Error("vertex " + v + " appears twice");
  }
  for (const auto& [v, c] : sd.children) {
    if (!sd.base.has_vertex(v)) throw Error("child decomposition for non-base vertex " + v);
    validate(c, seen);
  }
  for (const auto& [u, r] : sd.links) {
    if (!sd.base.has_vertex(u)) throw Error("link for non-base vertex " + u);
    if (r.empty()) continue;
    auto v = out_neighbor(sd.base, u);
    if (!v) throw Error("link for sink " + u);
    if (!in_family(child_of(sd, *v), r)) {
      throw Error("link of " + u + " is not in the family of " + *v);
    }
  }
}

}  // namespace

void require_valid(const SequentialDecomposition& sd) {
  VertexSet seen;
  validate(sd, seen);
}

OrientedGraph realize(const SequentialDecomposition& sd) {
  require_valid(sd);
  std::vector<VertexId> vs;
  std::vector<Arc> arcs;
  collect(sd, vs, arcs);
  std::sort(vs.begin(), vs.end());
  return OrientedGraph(vs, arcs);
}

bool realizes(const OrientedGraph& g, const SequentialDecomposition& sd) {
  try {
    return realize(sd) == g;
  } catch (const Error&) {
    return false;
  }
}

// ------------------------------------------------------------ tree bridges

namespace {

VertexSet strict_descendants(const std::map<VertexId, std::vector<VertexId>>& kids,
                             const VertexId& v) {
  VertexSet out;
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    auto it = kids.find(x);
    if (it == kids.end()) continue;
    for (const auto& c : it->second) {
      out.insert(c);
      stack.push_back(c);
    }
  }
  return out;
}

SequentialDecomposition seq_rec(const Derivation& d, const OrientedGraph& g,
                                const std::map<VertexId, std::vector<VertexId>>& kids,
                                const VertexId& rho, const VertexSet& keep) {
  SequentialDecomposition sd;
  VertexSet top;
  for (const auto& v : keep) {
    bool alone = true;
    for (auto p = d.tree.parent_of(v); alone && p; p = d.tree.parent_of(*p)) {
      if (keep.count(*p)) alone = false;
      if (*p == rho) break;
    }
    if (alone) top.insert(v);
  }
  sd.base = induced_subgraph(g, top);
  for (const auto& v : top) {
    VertexSet below;
    for (const auto& x : strict_descendants(kids, v)) {
      if (keep.count(x)) below.insert(x);
    }
    if (!below.empty()) sd.children.emplace(v, seq_rec(d, g, kids, v, below));
  }
  for (const auto& u : top) {
    auto v = out_neighbor(sd.base, u);
    if (!v) continue;
    VertexSet r;
    for (const auto& x : g.out_neighbors(u)) {
      if (x != *v) r.insert(x);
    }
    if (!r.empty()) sd.links.emplace(u, std::move(r));
  }
  return sd;
}

class ShadowLabels {
 public:
  explicit ShadowLabels(VertexSet used) : used_(std::move(used)) {}
  VertexId next() {
    while (true) {
      VertexId c = "_s" + std::to_string(counter_++);
      if (used_.insert(c).second) return c;
    }
  }

 private:
  VertexSet used_;
  int counter_ = 0;
};

struct Built {
  VertexId root;
  // Path from the root down to each base vertex, both ends included.
  std::map<VertexId, std::vector<VertexId>> path_to;
  std::map<VertexId, Built> child;
};

std::vector<VertexId> top_branch(const Built& b, const VertexSet& r) {
  for (const auto& [w, path] : b.path_to) {
    if (!r.count(w)) continue;
    std::vector<VertexId> out = path;
    VertexSet rest = r;
    rest.erase(w);
    if (!rest.empty()) {
      auto more = top_branch(b.child.at(w), rest);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }
  throw Error("stable set is not in the family");
}

// Base vertices hang off a spine of shadow vertices r_K -> ... -> r_0 (each
// the last-born of the previous one); the vertex added at step i is a child
// of r_i, so its branch may start at r_{i-1} and run down the spine to its
// out-neighbour, which was added earlier.
Built build_tree(const SequentialDecomposition& sd, BurlingTree& t, ShadowLabels& fresh) {
  Built b;
  std::map<VertexId, int> height;
  std::function<int(const VertexId&)> h = [&](const VertexId& v) -> int {
    auto it = height.find(v);
    if (it != height.end()) return it->second;
    auto o = out_neighbor(sd.base, v);
    int value = o ? h(*o) + 1 : 0;
    height[v] = value;
    return value;
  };
  std::vector<VertexId> order = sd.base.vertices();
  std::sort(order.begin(), order.end(), [&](const VertexId& a, const VertexId& c) {
    return std::make_pair(h(a), a) < std::make_pair(h(c), c);
  });
  const int k = static_cast<int>(order.size());
  std::vector<VertexId> spine;
  for (int i = 0; i <= k; ++i) spine.push_back(fresh.next());
  for (int i = 0; i < k; ++i) {
    t.parent[spine[i]] = spine[i + 1];
    t.last_born[spine[i + 1]] = spine[i];
  }
  b.root = spine[k];
  std::map<VertexId, int> step;
  for (int i = 1; i <= k; ++i) {
    const VertexId& x = order[i - 1];
    step[x] = i;
    t.parent[x] = spine[i];
    std::vector<VertexId> path(spine.rbegin(), spine.rbegin() + (k - i + 1));
    path.push_back(x);
    b.path_to[x] = std::move(path);
  }
  for (const auto& [v, c] : sd.children) {
    if (empty(c)) continue;
    Built cb = build_tree(c, t, fresh);
    t.parent[cb.root] = v;
    t.last_born[v] = cb.root;
    b.child.emplace(v, std::move(cb));
  }
  for (const auto& x : order) {
    auto v = out_neighbor(sd.base, x);
    if (!v) continue;
    std::vector<VertexId> branch;
    for (int i = step[x] - 1; i >= step[*v]; --i) branch.push_back(spine[i]);
    branch.push_back(*v);
    auto lit = sd.links.find(x);
    if (lit != sd.links.end() && !lit->second.empty()) {
      auto more = top_branch(b.child.at(*v), lit->second);
      branch.insert(branch.end(), more.begin(), more.end());
    }
    t.choose[x] = std::move(branch);
  }
  return b;
}

}  // namespace

SequentialDecomposition seq_from_tree(const Derivation& d) {
  require_valid(d);
  OrientedGraph g = derive(d);
  return seq_rec(d, g, d.tree.children(), d.tree.root, d.kept);
}

Derivation tree_from_seq(const SequentialDecomposition& sd) {
  require_valid(sd);
  std::vector<VertexId> vs;
  std::vector<Arc> arcs;
  collect(sd, vs, arcs);
  ShadowLabels fresh(VertexSet(vs.begin(), vs.end()));
  Derivation d;
  if (empty(sd)) {
    d.tree.root = fresh.next();
    return d;
  }
  Built b = build_tree(sd, d.tree, fresh);
  d.tree.root = b.root;
  d.kept.insert(vs.begin(), vs.end());
  drop_empty_choices(d.tree);
  require_valid(d);
  return d;
}

// ----------------------------------------------------------- serialization

namespace {

std::string join(const VertexSet& s) {
  std::string out;
  for (const auto& v : s) {
    out += out.empty() ? "" : " ";
    out += v;
  }
  return out;
}

void write_sd(std::ostringstream& out, const SequentialDecomposition& sd, const std::string& in) {
  out << in << "vertices:";
  for (const auto& v : sd.base.vertex_set()) out << ' ' << v;
  out << '\n';
  if (sd.base.num_arcs() > 0) {
    out << in << "arcs:\n";
    for (const auto& [u, v] : sd.base.arcs()) out << in << "  " << u << ' ' << v << '\n';
  }
  bool any_link = std::any_of(sd.links.begin(), sd.links.end(),
                              [](const auto& kv) { return !kv.second.empty(); });
  if (any_link) {
    out << in << "links:\n";
    for (const auto& [u, r] : sd.links) {
      if (!r.empty()) out << in << "  " << u << ": " << join(r) << '\n';
    }
  }
  bool any_child = std::any_of(sd.children.begin(), sd.children.end(),
                               [](const auto& kv) { return !empty(kv.second); });
  if (any_child) {
    out << in << "children:\n";
    for (const auto& [v, c] : sd.children) {
      if (empty(c)) continue;
      out << in << "  " << v << ":\n";
      write_sd(out, c, in + "    ");
    }
  }
}

struct Line {
  std::size_t number;
  std::size_t indent;
  std::string text;
};

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

SequentialDecomposition parse_sd(const std::vector<Line>& lines, std::size_t& pos,
                                 std::size_t indent) {
  SequentialDecomposition sd;
  std::vector<VertexId> vs;
  std::vector<Arc> arcs;
  bool have_vertices = false;
  auto items = [&](auto&& f) {
    while (pos < lines.size() && lines[pos].indent == indent + 2) f(lines[pos++]);
  };
  while (pos < lines.size() && lines[pos].indent == indent) {
    const Line& l = lines[pos++];
    auto colon = l.text.find(':');
    if (colon == std::string::npos) throw ParseError("expected a field", l.number);
    std::string key = l.text.substr(0, colon);
    std::string rest = l.text.substr(colon + 1);
    if (key == "vertices") {
      vs = tokens(rest);
      have_vertices = true;
    } else if (key == "arcs") {
      items([&](const Line& item) {
        auto t = tokens(item.text);
        if (t.size() != 2) throw ParseError("expected 'u v'", item.number);
        arcs.emplace_back(t[0], t[1]);
      });
    } else if (key == "links") {
      items([&](const Line& item) {
        auto c = item.text.find(':');
        if (c == std::string::npos) throw ParseError("expected 'u: x y ...'", item.number);
        auto t = tokens(item.text.substr(c + 1));
        sd.links[item.text.substr(0, c)] = VertexSet(t.begin(), t.end());
      });
    } else if (key == "children") {
      while (pos < lines.size() && lines[pos].indent == indent + 2) {
        const Line& item = lines[pos++];
        if (item.text.empty() || item.text.back() != ':') {
          throw ParseError("expected 'v:'", item.number);
        }
        VertexId v = item.text.substr(0, item.text.size() - 1);
        sd.children[v] = parse_sd(lines, pos, indent + 4);
      }
    } else {
      throw ParseError("unknown field '" + key + "'", l.number);
    }
  }
  if (pos < lines.size() && lines[pos].indent > indent) {
    throw ParseError("unexpected indentation", lines[pos].number);
  }
  if (!have_vertices && !arcs.empty()) throw ParseError("arcs without vertices", 0);
  try {
    sd.base = OrientedGraph(vs, arcs);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), pos < lines.size() ? lines[pos].number : lines.back().number);
  }
  return sd;
}

}  // namespace

std::string serialize(const SequentialDecomposition& sd) {
  std::ostringstream out;
  write_sd(out, sd, "");
  return out.str();
}

SequentialDecomposition parse_sequential(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t indent = raw.find_first_not_of(' ');
    if (indent == std::string::npos || raw[indent] == '#') continue;
    std::string body = raw.substr(indent);
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.pop_back();
    lines.push_back({number, indent, body});
  }
  std::size_t pos = 0;
  if (lines.empty()) return {};
  if (lines[0].indent != 0) throw ParseError("unexpected indentation", lines[0].number);
  SequentialDecomposition sd = parse_sd(lines, pos, 0);
  if (pos != lines.size()) throw ParseError("unexpected content", lines[pos].number);
  return sd;
}

// ------------------------------------------------------------ exact search
//
// minDepth(X) is the least depth of a decomposition of G[X] whose family
// contains every nonempty N+(z) & X for z outside X (these are exactly the
// link sets an enclosing decomposition needs). A base S of X must be
// in-closed within X, induce an in-forest, meet each such set once, and its
// sinks may not send arcs into X - S. Components of G[X - S] are then
// forced into the block of a base vertex, and the depth is one more than
// the deepest block. Without an orientation the same search also picks the
// root of every tree of G[S]; edges leaving S then point into the blocks.

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct Candidate {
  Mask base = 0;
  // Out-neighbour of each base vertex inside the base, or -1.
  std::vector<int> out;
};

struct Entry {
  int depth = kInf;
  std::size_t candidates = 0;
  bool split = false;
  std::vector<Mask> parts;
  Candidate best;
  std::vector<Mask> blocks;
};

class Engine {
 public:
  Engine(const BitGraph& g, bool oriented) : g_(g), oriented_(oriented) {}

  const Mask& reach(int v) const { return oriented_ ? g_.out[v] : g_.adj[v]; }

  std::vector<Mask> requirements(Mask x) const {
    std::vector<Mask> req;
    for_each_bit(g_.all() & ~x, [&](int z) {
      Mask r = reach(z) & x;
      if (r != 0 && std::find(req.begin(), req.end(), r) == req.end()) req.push_back(r);
    });
    std::sort(req.begin(), req.end());
    return req;
  }

  template <typename F>
  void for_each_candidate(Mask x, const std::vector<Mask>& req, F&& f) const {
    for (Mask s = (0 - x) & x; s != 0; s = (s - x) & x) {
      bool ok = std::all_of(req.begin(), req.end(), [&](Mask r) { return popcount(r & s) == 1; });
      if (!ok) continue;
      std::size_t edges = 0;
      for_each_bit(s, [&](int v) { edges += static_cast<std::size_t>(popcount(g_.adj[v] & s)); });
      edges /= 2;
      auto trees = components(g_, s);
      if (edges + trees.size() != static_cast<std::size_t>(popcount(s))) continue;
      if (oriented_) {
        Candidate c{s, std::vector<int>(static_cast<std::size_t>(g_.n), -1)};
        for_each_bit(s, [&](int v) {
          if ((g_.in[v] & x & ~s) != 0 || popcount(g_.out[v] & s) > 1) ok = false;
          if (g_.out[v] & s) c.out[static_cast<std::size_t>(v)] = lowest(g_.out[v] & s);
        });
        if (ok) f(c);
        continue;
      }
      std::vector<std::vector<int>> roots;
      for (Mask t : trees) {
        roots.emplace_back();
        for_each_bit(t, [&](int r) {
          if ((g_.adj[r] & x & ~s) == 0) roots.back().push_back(r);
        });
        if (roots.back().empty()) ok = false;
      }
      if (!ok) continue;
      std::vector<std::size_t> pick(trees.size(), 0);
      while (true) {
        Candidate c{s, std::vector<int>(static_cast<std::size_t>(g_.n), -1)};
        for (std::size_t i = 0; i < trees.size(); ++i) orient_toward(c, trees[i], roots[i][pick[i]]);
        f(c);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == roots[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
  }

  int evaluate(Mask x, const std::vector<Mask>& req, const Candidate& c, std::vector<Mask>& blocks) {
    const Mask rest = x & ~c.base;
    auto comps = components(g_, rest);
    std::vector<int> owner(comps.size(), -1);
    auto claim = [&](Mask touched, int w) {
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if ((comps[i] & touched) == 0) continue;
        if (owner[i] != -1 && owner[i] != w) return false;
        owner[i] = w;
      }
      return true;
    };
    bool ok = true;
    for_each_bit(c.base, [&](int v) {
      Mask nb = reach(v) & rest;
      if (nb == 0 || !ok) return;
      int o = c.out[static_cast<std::size_t>(v)];
      ok = o >= 0 && claim(nb, o);
    });
    for (Mask r : req) {
      if (!ok) break;
      ok = claim(r & rest, lowest(r & c.base));
    }
    if (!ok) return kInf;
    blocks.assign(static_cast<std::size_t>(g_.n), 0);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      int w = owner[i] == -1 ? lowest(c.base) : owner[i];
      blocks[static_cast<std::size_t>(w)] |= comps[i];
    }
    int deepest = 0;
    for (int v = 0; v < g_.n; ++v) {
      if (blocks[static_cast<std::size_t>(v)] == 0) continue;
      int d = solve(blocks[static_cast<std::size_t>(v)]);
      if (d >= kInf) return kInf;
      deepest = std::max(deepest, d);
    }
    return deepest + 1;
  }

  // Splits X into components when no required set spans two of them.
  std::optional<std::vector<Mask>> split(Mask x, const std::vector<Mask>& req) const {
    auto comps = components(g_, x);
    if (comps.size() < 2) return std::nullopt;
    for (Mask r : req) {
      int hit = 0;
      for (Mask c : comps) hit += (c & r) != 0;
      if (hit > 1) return std::nullopt;
    }
    return comps;
  }

  int solve(Mask x) {
    if (x == 0) return 0;
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second.depth;
    Entry e;
    auto req = requirements(x);
    if (auto parts = split(x, req)) {
      e.split = true;
      e.parts = *parts;
      e.depth = 0;
      for (Mask p : e.parts) {
        int d = solve(p);
        e.depth = std::max(e.depth, d);
        if (d >= kInf) break;
      }
    } else {
      std::vector<Mask> blocks;
      for_each_candidate(x, req, [&](const Candidate& c) {
        ++e.candidates;
        int d = evaluate(x, req, c, blocks);
        if (d < e.depth) {
          e.depth = d;
          e.best = c;
          e.blocks = blocks;
        }
      });
    }
    int d = e.depth;
    memo_.emplace(x, std::move(e));
    return d;
  }

  SequentialDecomposition build(Mask x) const {
    if (x == 0) return {};
    const Entry& e = memo_.at(x);
    if (e.split) {
      std::vector<VertexId> vs;
      std::vector<Arc> arcs;
      SequentialDecomposition out;
      for (Mask p : e.parts) {
        SequentialDecomposition part = build(p);
        for (const auto& v : part.base.vertices()) vs.push_back(v);
        for (const auto& a : part.base.arcs()) arcs.push_back(a);
        out.children.merge(part.children);
        out.links.merge(part.links);
      }
      std::sort(vs.begin(), vs.end());
      out.base = OrientedGraph(vs, arcs);
      return out;
    }
    return build_from(e.best, e.blocks);
  }

  SequentialDecomposition build_from(const Candidate& c, const std::vector<Mask>& blocks) const {
    SequentialDecomposition sd;
    std::vector<Arc> arcs;
    for_each_bit(c.base, [&](int u) {
      int v = c.out[static_cast<std::size_t>(u)];
      if (v < 0) return;
      arcs.emplace_back(g_.labels[static_cast<std::size_t>(u)], g_.labels[static_cast<std::size_t>(v)]);
      Mask r = reach(u) & blocks[static_cast<std::size_t>(v)];
      if (r != 0) sd.links[g_.labels[static_cast<std::size_t>(u)]] = g_.labels_of(r);
    });
    VertexSet base = g_.labels_of(c.base);
    sd.base = OrientedGraph(std::vector<VertexId>(base.begin(), base.end()), arcs);
    for_each_bit(c.base, [&](int v) {
      Mask b = blocks[static_cast<std::size_t>(v)];
      if (b != 0) sd.children.emplace(g_.labels[static_cast<std::size_t>(v)], build(b));
    });
    return sd;
  }

  const std::unordered_map<Mask, Entry>& memo() const { return memo_; }

 private:
  void orient_toward(Candidate& c, Mask tree, int root) const {
    Mask seen = bit(root);
    std::vector<int> frontier{root};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int v : frontier) {
        for_each_bit(g_.adj[v] & tree & ~seen, [&](int w) {
          c.out[static_cast<std::size_t>(w)] = v;
          seen |= bit(w);
          next.push_back(w);
        });
      }
      frontier = std::move(next);
    }
  }

  const BitGraph& g_;
  bool oriented_;
  std::unordered_map<Mask, Entry> memo_;
};

void check_budget(std::size_t n, const SearchOptions& opts) {
  if (n > opts.budget) {
    throw ResourceError("exact search budget exceeded: " + std::to_string(n) + " vertices > " +
                        std::to_string(opts.budget));
  }
}

SequentialSearch run_search(const BitGraph& g, bool oriented, const SearchOptions& opts) {
  SequentialSearch out;
  const Mask all = g.all();
  std::deque<Engine> engines;
  engines.emplace_back(g, oriented);
  Engine& main = engines.front();

  std::optional<Candidate> top;
  std::vector<Mask> top_blocks;
  std::size_t top_engine = 0;
  int best = kInf;
  if (all == 0 || main.split(all, {})) {
    best = main.solve(all);
  } else {
    std::vector<Candidate> cands;
    main.for_each_candidate(all, {}, [&](const Candidate& c) { cands.push_back(c); });
    const std::size_t workers = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::max(opts.threads, 1)), 1, std::max<std::size_t>(cands.size(), 1));
    while (engines.size() < workers) engines.emplace_back(g, oriented);
    std::vector<int> depths(cands.size(), kInf);
    std::vector<std::vector<Mask>> blocks(cands.size());
    auto work = [&](std::size_t t) {
      for (std::size_t i = t; i < cands.size(); i += workers) {
        depths[i] = engines[t].evaluate(all, {}, cands[i], blocks[i]);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (depths[i] < best) {
        best = depths[i];
        top = cands[i];
        top_blocks = blocks[i];
        top_engine = i % workers;
      }
    }
    out.stats.subsets = 1;
    out.stats.candidates = cands.size();
  }

  std::map<Mask, std::size_t> seen;
  for (const auto& e : engines) {
    for (const auto& [x, entry] : e.memo()) seen.emplace(x, entry.candidates);
  }
  out.stats.subsets += seen.size();
  for (const auto& [x, c] : seen) out.stats.candidates += c;

  if (best >= kInf) return out;
  out.depth = best;
  out.decomposition = top ? engines[top_engine].build_from(*top, top_blocks) : main.build(all);
  return out;
}

}  // namespace

SequentialSearch min_sequential(const OrientedGraph& g, const SearchOptions& opts) {
  check_budget(g.num_vertices(), opts);
  return run_search(to_bits(g), true, opts);
}

SequentialSearch min_sequential(const Graph& g, const SearchOptions& opts) {
  check_budget(g.num_vertices(), opts);
  return run_search(to_bits(g), false, opts);
}

std::optional<SequentialDecomposition> find_sequential(const OrientedGraph& g, int k,
                                                       const SearchOptions& opts) {
  auto s = min_sequential(g, opts);
  if (!s.depth || *s.depth > k) return std::nullopt;
  return s.decomposition;
}

std::optional<int> nobility_oriented(const OrientedGraph& g, const SearchOptions& opts) {
  return min_sequential(g, opts).depth;
}

std::optional<int> nobility(const Graph& g, const SearchOptions& opts) {
  return min_sequential(g, opts).depth;
}

}  // namespace burling
