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

#ifndef BURLING_TREE_HPP_
#define BURLING_TREE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burling/graph.hpp"

namespace burling {

// A rooted tree with a last-born child for every internal vertex and, for
// every vertex, the branch it chooses (top-down). Absent choose entries are
// empty lists.
struct BurlingTree {
  VertexId root;
  std::map<VertexId, VertexId> parent;
  std::map<VertexId, VertexId> last_born;
  std::map<VertexId, std::vector<VertexId>> choose;

  // Root first, then the rest sorted.
  std::vector<VertexId> vertices() const;
  bool contains(const VertexId& v) const;
  std::size_t size() const { return parent.size() + (root.empty() ? 0 : 1); }

  const std::vector<VertexId>& choose_of(const VertexId& v) const;
  std::optional<VertexId> parent_of(const VertexId& v) const;
  std::optional<VertexId> last_born_of(const VertexId& v) const;
  bool is_last_born(const VertexId& v) const;

  // Sorted children of every vertex (leaves map to an empty list).
  std::map<VertexId, std::vector<VertexId>> children() const;
  std::map<VertexId, int> depths() const;
  // True when `a` is `b` or an ancestor of `b`.
  bool is_ancestor(const VertexId& a, const VertexId& b) const;
  // Vertices from the root down to `v`.
  std::vector<VertexId> path_from_root(const VertexId& v) const;

  friend bool operator==(const BurlingTree&, const BurlingTree&) = default;
};

struct Derivation {
  BurlingTree tree;
  VertexSet kept;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Removes empty choose entries so that equal trees compare equal.
void drop_empty_choices(BurlingTree& t);

// Every violated definition clause, each prefixed with the offending vertex.
std::vector<std::string> validate_tree(const BurlingTree& t);

// Throws Error listing the violations when the tree (or kept set) is invalid.
void require_valid(const BurlingTree& t);
void require_valid(const Derivation& d);

OrientedGraph fully_derive(const BurlingTree& t);
OrientedGraph derive(const Derivation& d);

enum class ArcClass { Top, Bottom, TopAndBottom, Middle };

std::string_view to_string(ArcClass c);
bool is_top(ArcClass c);
bool is_bottom(ArcClass c);

std::map<Arc, ArcClass> classify_arcs(const Derivation& d);

// First difference between `g` and derive(d), or nullopt when they are equal
// (also reports an invalid derivation).
std::optional<std::string> derivation_mismatch(const OrientedGraph& g, const Derivation& d);
bool check_derivation(const OrientedGraph& g, const Derivation& d);

// ---------------------------------------------------------------------------
// Tree file format
//
//   root: r
//   edges:
//     r u
//   last_born:
//     r x
//   choose:
//     u: x y
//   kept:
//     u
//
// Unknown top-level fields are skipped together with their indented items,
// so certificates that embed a tree can be read directly.

Derivation parse_derivation(std::string_view text);
std::string serialize(const Derivation& d);

}  // namespace burling

#endif  // BURLING_TREE_HPP_
