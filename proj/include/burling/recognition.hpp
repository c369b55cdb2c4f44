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

// Burling / non-Burling decisions with certificates, and the obstruction
// detectors used on the way.

#ifndef BURLING_RECOGNITION_HPP_
#define BURLING_RECOGNITION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burling/graph.hpp"
#include "burling/sequential.hpp"
#include "burling/tree.hpp"

namespace burling {

inline constexpr std::size_t kDefaultHoleCap = 5000;

struct WheelWitness {
  Hole rim;
  VertexId center;
};

struct FlowerWitness {
  Hole core;
  // Keyed by the core edge (smaller label first).
  std::map<Edge, Hole> petals;
};

struct OrientationViolation {
  enum class Kind { Hole, Dumbbell, Domino, Theta };
  Kind kind = Kind::Hole;
  std::vector<Hole> holes;
  // dumbbell: the path x..x'; domino: the shared edge; theta: the apexes.
  std::vector<VertexId> vertices;
};

std::string to_string(OrientationViolation::Kind k);

struct Verdict {
  enum class Outcome { Burling, NotBurling, Undecided };
  enum class Reason { None, Triangle, Wheel, Flower, FilterFailure, OrientationConstraint, Exhausted };
  Outcome outcome = Outcome::Undecided;
  Reason reason = Reason::None;

  std::optional<Derivation> derivation;
  std::optional<int> nobility;

  std::vector<VertexId> triangle;
  std::optional<WheelWitness> wheel;
  std::optional<FlowerWitness> flower;
  std::optional<Graph> filter_subgraph;
  std::optional<OrientationViolation> violation;

  SearchStats stats;
};

// "triangle", "wheel", "flower", "filter", "orientation", "exhausted".
std::string to_string(Verdict::Reason r);

struct RecognizeOptions {
  std::size_t budget = kDefaultExactBudget;
  bool obstructions_only = false;
  int threads = 1;
  // Vertex limit for hole enumeration and the number of holes examined by
  // the detectors. Detectors that hit either limit are skipped.
  std::size_t hole_budget = 24;
  std::size_t hole_cap = kDefaultHoleCap;
};

// Throws ResourceError when no detector decides and the graph exceeds the
// exact budget (unless obstructions_only, which yields Undecided).
Verdict recognize(const Graph& g, const RecognizeOptions& opts = {});
Verdict recognize_oriented(const OrientedGraph& g, const RecognizeOptions& opts = {});

// The detectors throw ResourceError past the hole limits.
std::optional<WheelWitness> find_wheel(const Graph& g, std::size_t hole_budget = 24,
                                       std::size_t hole_cap = kDefaultHoleCap);
std::optional<FlowerWitness> find_flower(const Graph& g, std::size_t hole_budget = 24,
                                         std::size_t hole_cap = kDefaultHoleCap);

enum class K4Class { Burling, NotBurling, NotAK4Subdivision };
std::string to_string(K4Class c);
K4Class classify_k4_subdivision(const Graph& g);

// Checks, in this order, long thetas, dominos, dumbbells and single holes
// of the given orientation. nullopt means no violation was found.
std::optional<OrientationViolation> orientation_constraints(
    const OrientedGraph& g, std::size_t hole_budget = 24, std::size_t hole_cap = kDefaultHoleCap);

// Definition checks for the witnesses, written independently of the finders.
bool is_wheel_witness(const Graph& g, const WheelWitness& w);
bool is_flower_witness(const Graph& g, const FlowerWitness& w);
bool is_violation_witness(const OrientedGraph& g, const OrientationViolation& v);
// Burling: the derivation derives g (or an orientation of g). NotBurling:
// the witness for the reason holds. Undecided: false.
bool verify_verdict(const Graph& g, const Verdict& v);
bool verify_verdict(const OrientedGraph& g, const Verdict& v);

// cert_version 1 document: result, reason, tree fields (Burling) or a
// witness section, then stats.
std::string serialize(const Verdict& v);

}  // namespace burling

#endif  // BURLING_RECOGNITION_HPP_
