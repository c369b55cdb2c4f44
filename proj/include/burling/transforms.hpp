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

// Rewrites of Burling trees that keep the derived graph (normalize) or
// change it in a controlled way (subdivisions, contraction). Shadow
// vertices introduced here are labelled `_s<n>`.

#ifndef BURLING_TRANSFORMS_HPP_
#define BURLING_TRANSFORMS_HPP_

#include <string>
#include <vector>

#include "burling/tree.hpp"

namespace burling {

// Same derived graph and arc classes; afterwards the kept vertices are
// exactly the vertices that are neither the root nor a last-born.
Derivation normalize(const Derivation& d);
bool is_normalized(const Derivation& d);

// Replaces the bottom arc uv by u -> w -> v.
Derivation subdivide_bottom(const Derivation& d, const VertexId& u, const VertexId& v,
                            const VertexId& w);

// Replaces the top arc uv (u a source) by w -> u and w -> v.
Derivation top_subdivide(const Derivation& d, const VertexId& u, const VertexId& v,
                         const VertexId& w);

// Contracts uv into u; requires N+(u) = {v} and N-(v) = {u}.
Derivation contract(const Derivation& d, const VertexId& u, const VertexId& v);

struct ExpandStep {
  enum class Mode { BottomPath, TopSplit };
  Arc arc;
  Mode mode = Mode::BottomPath;
  // Number of new vertices: a bottom path u -> w1 -> ... -> wn -> v, or a
  // split wn -> ... -> w1 -> u with wn -> v.
  int length = 1;
};

// Applies the steps in order. New vertices are labelled `<u>-<v>-<i>`
// (primed until fresh).
Derivation expand_arcs(const Derivation& d, const std::vector<ExpandStep>& plan);

// "u>v:bottom:3,a>b:top:2"
std::vector<ExpandStep> parse_expand_plan(const std::string& text);

}  // namespace burling

#endif  // BURLING_TRANSFORMS_HPP_
