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

#include "burling/transforms.hpp"

#include <algorithm>

namespace burling {

namespace {

class FreshLabels {
 public:
  explicit FreshLabels(const Derivation& d) {
    for (const auto& v : d.tree.vertices()) used_.insert(v);
    used_.insert(d.kept.begin(), d.kept.end());
  }
  void reserve(const VertexId& v) { used_.insert(v); }
  VertexId next() {
    while (true) {
      VertexId candidate = "_s" + std::to_string(counter_++);
      if (used_.insert(candidate).second) return candidate;
    }
  }

 private:
  VertexSet used_;
  int counter_ = 0;
};

// Inserts `items` right before `target` in every choose list that contains
// it, skipping the lists of vertices in `skip`.
void insert_before(BurlingTree& t, const VertexId& target, const std::vector<VertexId>& items,
                   const VertexSet& skip = {}) {
  for (auto& [z, branch] : t.choose) {
    if (skip.count(z)) continue;
    auto it = std::find(branch.begin(), branch.end(), target);
    if (it != branch.end()) branch.insert(it, items.begin(), items.end());
  }
}

std::size_t index_in(const std::vector<VertexId>& list, const VertexId& v) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), v) - list.begin());
}

void require_fresh(const Derivation& d, const VertexId& w) {
  if (!is_valid_label(w)) throw Error("invalid vertex label '" + w + "'");
  if (d.tree.contains(w) || d.kept.count(w)) throw Error("label '" + w + "' is not fresh");
}

ArcClass class_of(const Derivation& d, const VertexId& u, const VertexId& v) {
  auto classes = classify_arcs(d);
  auto it = classes.find({u, v});
  if (it == classes.end()) throw Error("no arc " + u + " " + v + " in the derived graph");
  return it->second;
}

}  // namespace

bool is_normalized(const Derivation& d) {
  for (const auto& v : d.tree.vertices()) {
    bool should_keep = v != d.tree.root && !d.tree.is_last_born(v);
    if (should_keep != (d.kept.count(v) != 0)) return false;
  }
  return true;
}

Derivation normalize(const Derivation& in) {
  require_valid(in);
  Derivation d = in;
  BurlingTree& t = d.tree;
  FreshLabels fresh(d);

  if (d.kept.count(t.root)) {
    VertexId r = fresh.next();
    t.parent[t.root] = r;
    t.last_born[r] = t.root;
    t.root = r;
  }

  for (const auto& v : d.kept) {
    if (!t.is_last_born(v)) continue;
    VertexId u = t.parent.at(v);
    VertexId w = fresh.next();
    VertexId w2 = fresh.next();
    t.parent[w] = u;
    t.last_born[u] = w;
    t.parent[v] = w;
    t.parent[w2] = w;
    t.last_born[w] = w2;
    insert_before(t, v, {w});
  }

  while (true) {
    std::optional<VertexId> target;
    for (const auto& [v, p] : t.parent) {
      if (!d.kept.count(v) && !t.is_last_born(v)) {
        target = v;
        break;
      }
    }
    if (!target) break;
    const VertexId v = *target;
    const VertexId u = t.parent.at(v);
    bool childless = std::none_of(t.parent.begin(), t.parent.end(),
                                  [&](const auto& kv) { return kv.second == v; });
    if (childless) {
      t.parent.erase(v);
      t.choose.erase(v);
      for (auto& [z, branch] : t.choose) {
        if (!branch.empty() && branch.back() == v) branch.pop_back();
      }
      continue;
    }
    // Hang v (with its subtree) below the end of u's last-born chain, which
    // consists of shadow vertices only at this point.
    std::vector<VertexId> chain{t.last_born.at(u)};
    while (auto next = t.last_born_of(chain.back())) chain.push_back(*next);
    t.parent[v] = chain.back();
    t.last_born[chain.back()] = v;
    t.choose.erase(v);
    insert_before(t, v, chain);
  }
  drop_empty_choices(t);
  return d;
}

Derivation subdivide_bottom(const Derivation& d, const VertexId& u, const VertexId& v,
                            const VertexId& w) {
  require_valid(d);
  if (!is_bottom(class_of(d, u, v))) throw Error("arc " + u + " " + v + " is not a bottom arc");
  require_fresh(d, w);

  Derivation n = normalize(d);
  BurlingTree& t = n.tree;
  FreshLabels fresh(n);
  fresh.reserve(w);

  const VertexId x = t.parent.at(v);
  const VertexId last = t.last_born.at(x);
  const VertexId x1 = fresh.next();
  t.parent[x1] = x;
  t.last_born[x] = x1;
  t.parent[last] = x1;
  t.last_born[x1] = last;
  t.parent[v] = x1;
  t.parent[w] = x;
  n.kept.insert(w);

  insert_before(t, last, {x1}, {u, v});
  insert_before(t, v, {x1}, {u, v});

  auto& cu = t.choose[u];
  cu.resize(index_in(cu, v));
  cu.push_back(w);
  t.choose[w] = {x1, v};
  drop_empty_choices(t);
  return n;
}

Derivation top_subdivide(const Derivation& d, const VertexId& u, const VertexId& v,
                         const VertexId& w) {
  require_valid(d);
  if (!is_top(class_of(d, u, v))) throw Error("arc " + u + " " + v + " is not a top arc");
  if (derive(d).in_degree(u) != 0) throw Error("vertex " + u + " is not a source");
  require_fresh(d, w);

  Derivation n = normalize(d);
  BurlingTree& t = n.tree;
  FreshLabels fresh(n);
  fresh.reserve(w);

  const VertexId x = t.parent.at(u);
  VertexId y;
  if (auto l = t.last_born_of(v)) {
    y = *l;
  } else {
    y = fresh.next();
    t.parent[y] = v;
    t.last_born[v] = y;
  }
  std::vector<VertexId> cu = t.choose.at(u);
  const std::size_t idx = index_in(cu, v);
  VertexId v1;
  if (idx + 1 < cu.size()) {
    v1 = cu[idx + 1];
  } else {
    v1 = y;
    cu.push_back(y);
  }

  const VertexId y1 = fresh.next();
  t.parent[u] = v;
  t.parent[y1] = v;
  t.parent[y] = y1;
  t.parent[v1] = y1;
  t.last_born[v] = y1;
  t.last_born[y1] = y;
  t.parent[w] = x;
  n.kept.insert(w);

  // v1 now hangs below y1, whose last-born is y: its own list stays as is.
  insert_before(t, y, {y1}, {u, v1});
  if (v1 != y) insert_before(t, v1, {y1}, {u});

  std::vector<VertexId> cw(cu.begin(), cu.begin() + static_cast<long>(idx) + 1);
  cw.push_back(u);
  t.choose[w] = std::move(cw);
  std::vector<VertexId> new_cu{y1};
  new_cu.insert(new_cu.end(), cu.begin() + static_cast<long>(idx) + 1, cu.end());
  t.choose[u] = std::move(new_cu);
  drop_empty_choices(t);
  return n;
}

Derivation contract(const Derivation& d, const VertexId& u, const VertexId& v) {
  require_valid(d);
  OrientedGraph g = derive(d);
  if (!g.has_vertex(u) || !g.has_vertex(v) || !g.has_arc(u, v)) {
    throw Error("no arc " + u + " " + v + " in the derived graph");
  }
  if (g.out_neighbors(u) != VertexSet{v}) throw Error("vertex " + u + " has other out-neighbors");
  if (g.in_neighbors(v) != VertexSet{u}) throw Error("vertex " + v + " has other in-neighbors");

  Derivation out = d;
  BurlingTree& t = out.tree;
  std::vector<VertexId> cu = t.choose.at(u);
  cu.resize(index_in(cu, v));
  const auto& cv = d.tree.choose_of(v);
  cu.insert(cu.end(), cv.begin(), cv.end());
  t.choose[u] = std::move(cu);
  out.kept.erase(v);
  drop_empty_choices(t);
  return out;
}

Derivation expand_arcs(const Derivation& d, const std::vector<ExpandStep>& plan) {
  Derivation cur = d;
  for (std::size_t k = 0; k < plan.size(); ++k) {
    const auto& step = plan[k];
    const auto& [u, v] = step.arc;
    const bool bottom = step.mode == ExpandStep::Mode::BottomPath;
    try {
      if (step.length < 1) throw Error("length must be at least 1");
      VertexId prev = u;
      for (int i = 1; i <= step.length; ++i) {
        VertexId w = u + "-" + v + "-" + std::to_string(i);
        while (cur.tree.contains(w) || cur.kept.count(w)) w += "'";
        cur = bottom ? subdivide_bottom(cur, prev, v, w) : top_subdivide(cur, prev, v, w);
        prev = w;
      }
    } catch (const Error& e) {
      throw Error("expand step " + std::to_string(k + 1) + " (" + u + ">" + v + ":" +
                  (bottom ? "bottom" : "top") + ":" + std::to_string(step.length) +
                  "): " + e.what());
    }
  }
  return cur;
}

std::vector<ExpandStep> parse_expand_plan(const std::string& text) {
  std::vector<ExpandStep> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) {
      if (end == text.size()) break;
      throw Error("empty expand step");
    }
    std::size_t c2 = item.rfind(':');
    std::size_t c1 = c2 == std::string::npos ? c2 : item.rfind(':', c2 - 1);
    std::size_t gt = item.find('>');
    if (c1 == std::string::npos || gt == std::string::npos || gt > c1) {
      throw Error("malformed expand step '" + item + "' (expected u>v:bottom|top:len)");
    }
    ExpandStep step;
    step.arc = {item.substr(0, gt), item.substr(gt + 1, c1 - gt - 1)};
    std::string mode = item.substr(c1 + 1, c2 - c1 - 1);
    if (mode == "bottom") {
      step.mode = ExpandStep::Mode::BottomPath;
    } else if (mode == "top") {
      step.mode = ExpandStep::Mode::TopSplit;
    } else {
      throw Error("unknown expand mode '" + mode + "'");
    }
    try {
      std::size_t used = 0;
      step.length = std::stoi(item.substr(c2 + 1), &used);
      if (used != item.size() - c2 - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error("malformed length in expand step '" + item + "'");
    }
    out.push_back(step);
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace burling
