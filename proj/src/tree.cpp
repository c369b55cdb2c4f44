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

#include "burling/tree.hpp"

#include <algorithm>
#include <sstream>

namespace burling {

namespace {
const std::vector<VertexId> kNoChoice;
}  // namespace

std::vector<VertexId> BurlingTree::vertices() const {
  std::vector<VertexId> out;
  if (!root.empty()) out.push_back(root);
  for (const auto& [v, p] : parent) {
    if (v != root) out.push_back(v);
  }
  return out;
}

bool BurlingTree::contains(const VertexId& v) const {
  return (!root.empty() && v == root) || parent.count(v) != 0;
}

const std::vector<VertexId>& BurlingTree::choose_of(const VertexId& v) const {
  auto it = choose.find(v);
  return it == choose.end() ? kNoChoice : it->second;
}

std::optional<VertexId> BurlingTree::parent_of(const VertexId& v) const {
  auto it = parent.find(v);
  if (it == parent.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> BurlingTree::last_born_of(const VertexId& v) const {
  auto it = last_born.find(v);
  if (it == last_born.end()) return std::nullopt;
  return it->second;
}

bool BurlingTree::is_last_born(const VertexId& v) const {
  auto p = parent_of(v);
  return p && last_born_of(*p) == v;
}

std::map<VertexId, std::vector<VertexId>> BurlingTree::children() const {
  std::map<VertexId, std::vector<VertexId>> out;
  for (const auto& v : vertices()) out[v];
  for (const auto& [c, p] : parent) out[p].push_back(c);
  return out;
}

std::map<VertexId, int> BurlingTree::depths() const {
  std::map<VertexId, int> out;
  if (root.empty()) return out;
  auto kids = children();
  std::vector<VertexId> stack{root};
  out[root] = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& c : kids[v]) {
      if (out.count(c)) continue;
      out[c] = out[v] + 1;
      stack.push_back(c);
    }
  }
  return out;
}

bool BurlingTree::is_ancestor(const VertexId& a, const VertexId& b) const {
  VertexId cur = b;
  for (std::size_t steps = 0; steps <= parent.size(); ++steps) {
    if (cur == a) return true;
    auto it = parent.find(cur);
    if (it == parent.end()) return false;
    cur = it->second;
  }
  return false;
}

std::vector<VertexId> BurlingTree::path_from_root(const VertexId& v) const {
  std::vector<VertexId> out{v};
  VertexId cur = v;
  while (true) {
    auto it = parent.find(cur);
    if (it == parent.end() || out.size() > parent.size() + 1) break;
    cur = it->second;
    out.push_back(cur);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void drop_empty_choices(BurlingTree& t) {
  std::erase_if(t.choose, [](const auto& kv) { return kv.second.empty(); });
}

// ---------------------------------------------------------------- validation

std::vector<std::string> validate_tree(const BurlingTree& t) {
  std::vector<std::string> out;
  auto violation = [&](const VertexId& v, const std::string& clause) {
    out.push_back(v + ": " + clause);
  };
  if (t.root.empty()) {
    out.push_back("tree has no root");
    return out;
  }
  if (!is_valid_label(t.root)) violation(t.root, "invalid label");
  if (t.parent.count(t.root)) violation(t.root, "the root must not have a parent");
  for (const auto& [c, p] : t.parent) {
    if (!is_valid_label(c)) violation(c, "invalid label");
    if (!t.contains(p)) violation(c, "parent " + p + " is not a tree vertex");
  }
  if (!out.empty()) return out;
  for (const auto& [c, p] : t.parent) {
    VertexId cur = c;
    std::size_t steps = 0;
    while (cur != t.root && steps <= t.parent.size()) {
      cur = t.parent.at(cur);
      ++steps;
    }
    if (cur != t.root) violation(c, "does not reach the root (cycle in parent mapping)");
  }
  if (!out.empty()) return out;

  auto kids = t.children();
  for (const auto& [v, l] : t.last_born) {
    if (!t.contains(v)) {
      violation(v, "last-born entry for a vertex outside the tree");
    } else if (kids[v].empty()) {
      violation(v, "a leaf has no last-born");
    } else if (t.parent_of(l) != v) {
      violation(v, "last-born " + l + " is not a child");
    }
  }
  for (const auto& [v, cs] : kids) {
    if (!cs.empty() && !t.last_born.count(v)) violation(v, "internal vertex has no last-born");
  }
  for (const auto& [v, branch] : t.choose) {
    if (branch.empty()) continue;
    if (!t.contains(v)) {
      violation(v, "choose entry for a vertex outside the tree");
      continue;
    }
    if (v == t.root) {
      violation(v, "choose of the root must be empty");
      continue;
    }
    if (t.is_last_born(v)) {
      violation(v, "choose of a last-born must be empty");
      continue;
    }
    auto start = t.last_born_of(t.parent.at(v));
    if (!start || branch.front() != *start) {
      violation(v, "choose must start at the last-born of its parent");
      continue;
    }
    for (std::size_t i = 1; i < branch.size(); ++i) {
      if (t.parent_of(branch[i]) != branch[i - 1]) {
        violation(v, "choose must follow a branch (" + branch[i] + " is not a child of " +
                         branch[i - 1] + ")");
        break;
      }
    }
  }
  return out;
}

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::string out = "invalid Burling tree:";
  for (const auto& s : v) out += "\n  " + s;
  return out;
}

}  // namespace

void require_valid(const BurlingTree& t) {
  auto violations = validate_tree(t);
  if (!violations.empty()) throw Error(join_violations(violations));
}

void require_valid(const Derivation& d) {
  require_valid(d.tree);
  for (const auto& v : d.kept) {
    if (!d.tree.contains(v)) throw Error("kept vertex '" + v + "' is not a tree vertex");
  }
}

OrientedGraph fully_derive(const BurlingTree& t) {
  require_valid(t);
  std::vector<Arc> arcs;
  for (const auto& [v, branch] : t.choose) {
    for (const auto& w : branch) arcs.emplace_back(v, w);
  }
  auto vs = t.vertices();
  std::sort(vs.begin(), vs.end());
  return OrientedGraph(vs, arcs);
}

OrientedGraph derive(const Derivation& d) {
  require_valid(d);
  std::vector<Arc> arcs;
  for (const auto& [v, branch] : d.tree.choose) {
    if (!d.kept.count(v)) continue;
    for (const auto& w : branch) {
      if (d.kept.count(w)) arcs.emplace_back(v, w);
    }
  }
  return OrientedGraph(std::vector<VertexId>(d.kept.begin(), d.kept.end()), arcs);
}

std::string_view to_string(ArcClass c) {
  switch (c) {
    case ArcClass::Top:
      return "top";
    case ArcClass::Bottom:
      return "bottom";
    case ArcClass::TopAndBottom:
      return "top-and-bottom";
    case ArcClass::Middle:
      return "middle";
  }
  return "middle";
}

bool is_top(ArcClass c) { return c == ArcClass::Top || c == ArcClass::TopAndBottom; }
bool is_bottom(ArcClass c) { return c == ArcClass::Bottom || c == ArcClass::TopAndBottom; }

std::map<Arc, ArcClass> classify_arcs(const Derivation& d) {
  require_valid(d);
  std::map<Arc, ArcClass> out;
  for (const auto& [u, branch] : d.tree.choose) {
    if (!d.kept.count(u)) continue;
    std::vector<VertexId> kept_out;
    for (const auto& w : branch) {
      if (d.kept.count(w)) kept_out.push_back(w);
    }
    for (std::size_t i = 0; i < kept_out.size(); ++i) {
      ArcClass c = ArcClass::Middle;
      if (kept_out.size() == 1) {
        c = ArcClass::TopAndBottom;
      } else if (i == 0) {
        c = ArcClass::Top;
      } else if (i + 1 == kept_out.size()) {
        c = ArcClass::Bottom;
      }
      out[{u, kept_out[i]}] = c;
    }
  }
  return out;
}

std::optional<std::string> derivation_mismatch(const OrientedGraph& g, const Derivation& d) {
  OrientedGraph h;
  try {
    h = derive(d);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  const VertexSet gv = g.vertex_set();
  const VertexSet hv = h.vertex_set();
  for (const auto& v : gv) {
    if (!hv.count(v)) return "vertex " + v + " is in the graph but not kept by the tree";
  }
  for (const auto& v : hv) {
    if (!gv.count(v)) return "vertex " + v + " is kept by the tree but not in the graph";
  }
  for (const auto& [a, b] : g.arcs()) {
    if (!h.has_arc(a, b)) return "arc " + a + " " + b + " is in the graph but not derived";
  }
  for (const auto& [a, b] : h.arcs()) {
    if (!g.has_arc(a, b)) return "arc " + a + " " + b + " is derived but not in the graph";
  }
  return std::nullopt;
}

bool check_derivation(const OrientedGraph& g, const Derivation& d) {
  return !derivation_mismatch(g, d).has_value();
}

// ---------------------------------------------------------------- text format

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<std::string_view> tokens_of(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId label_at(std::string_view tok, std::size_t line) {
  if (!is_valid_label(tok)) throw ParseError("invalid vertex label '" + std::string(tok) + "'", line);
  return VertexId(tok);
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view stripped = line;
    while (!stripped.empty() && stripped.front() == ' ') stripped.remove_prefix(1);
    if (stripped.empty() || stripped.front() == '#') continue;
    lines.push_back({number, line});
  }

  static const std::vector<std::string> kFields = {"root", "edges", "last_born", "choose", "kept"};
  Derivation d;
  std::vector<Edge> edges;
  std::vector<std::pair<VertexId, VertexId>> last_born;
  int last_field = -1;
  bool seen_root = false;

  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.text.front() == ' ') throw ParseError("unexpected indented line", head.number);
    std::size_t colon = head.text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<field>:'", head.number);
    std::string key(head.text.substr(0, colon));
    std::string_view value = head.text.substr(colon + 1);
    while (!value.empty() && value.front() == ' ') value.remove_prefix(1);

    std::size_t body_end = i + 1;
    while (body_end < lines.size() && lines[body_end].text.front() == ' ') ++body_end;

    auto field = std::find(kFields.begin(), kFields.end(), key);
    if (field == kFields.end()) {
      i = body_end;
      continue;
    }
    int index = static_cast<int>(field - kFields.begin());
    if (index <= last_field) {
      throw ParseError("field '" + key + "' is duplicated or out of order", head.number);
    }
    last_field = index;

    if (key == "root") {
      if (body_end != i + 1) throw ParseError("'root' takes a single value", lines[i + 1].number);
      d.tree.root = label_at(value, head.number);
      seen_root = true;
    } else {
      if (!value.empty()) throw ParseError("field '" + key + "' expects indented items", head.number);
      for (std::size_t j = i + 1; j < body_end; ++j) {
        const Line& item = lines[j];
        if (item.text.size() < 3 || item.text.substr(0, 2) != "  " || item.text[2] == ' ') {
          throw ParseError("list items must be indented by two spaces", item.number);
        }
        std::string_view body = item.text.substr(2);
        if (key == "edges" || key == "last_born") {
          auto toks = tokens_of(body);
          if (toks.size() != 2) throw ParseError("expected '<parent> <child>'", item.number);
          auto p = label_at(toks[0], item.number);
          auto c = label_at(toks[1], item.number);
          if (key == "edges") {
            if (d.tree.parent.count(c)) {
              throw ParseError("vertex '" + c + "' has two parents", item.number);
            }
            d.tree.parent[c] = p;
          } else {
            if (d.tree.last_born.count(p)) {
              throw ParseError("vertex '" + p + "' has two last-borns", item.number);
            }
            d.tree.last_born[p] = c;
          }
        } else if (key == "choose") {
          std::size_t c = body.find(':');
          if (c == std::string_view::npos) throw ParseError("expected '<v>: <w1> ...'", item.number);
          auto v = label_at(body.substr(0, c), item.number);
          if (d.tree.choose.count(v)) throw ParseError("duplicate choose for '" + v + "'", item.number);
          std::vector<VertexId> branch;
          for (auto tok : tokens_of(body.substr(c + 1))) branch.push_back(label_at(tok, item.number));
          d.tree.choose[v] = std::move(branch);
        } else {
          auto toks = tokens_of(body);
          if (toks.size() != 1) throw ParseError("expected a single vertex", item.number);
          if (!d.kept.insert(label_at(toks[0], item.number)).second) {
            throw ParseError("duplicate kept vertex", item.number);
          }
        }
      }
    }
    i = body_end;
  }
  if (!seen_root) throw ParseError("missing 'root' field", 0);
  return d;
}

std::string serialize(const Derivation& d) {
  std::ostringstream os;
  os << "root: " << d.tree.root << '\n';
  std::set<Edge> edges;
  for (const auto& [c, p] : d.tree.parent) edges.insert({p, c});
  os << "edges:\n";
  for (const auto& [p, c] : edges) os << "  " << p << ' ' << c << '\n';
  os << "last_born:\n";
  for (const auto& [p, c] : d.tree.last_born) os << "  " << p << ' ' << c << '\n';
  os << "choose:\n";
  for (const auto& [v, branch] : d.tree.choose) {
    if (branch.empty()) continue;
    os << "  " << v << ':';
    for (const auto& w : branch) os << ' ' << w;
    os << '\n';
  }
  os << "kept:\n";
  for (const auto& v : d.kept) os << "  " << v << '\n';
  return os.str();
}

}  // namespace burling
