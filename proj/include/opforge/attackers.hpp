// Copyright 2026 The opinion-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opforge/diffusion.hpp"
#include "opforge/graph.hpp"
#include "opforge/rng.hpp"

namespace opforge {

enum class AttackerKind : std::uint8_t { Strong, Moderate, Weak };

// Seed-set selection strategies. Strong attackers additionally control the
// color split; moderate attackers only pick the set.
enum class SeedStrategy : std::uint8_t {
  Explicit,          // use the hint verbatim
  DegreeGreedyBlack, // strong: highest-degree seeds, black on the top ones
  ComponentSplit,    // strong: whites fill one component, blacks elsewhere
  DegreeGreedy,      // moderate: highest-degree seeds
  RandomBaseline,    // uniform seed set
};

struct AttackerSpec {
  AttackerKind kind = AttackerKind::Weak;
  double alpha = 0.0;    // in (0, 1/2)
  double epsilon = 0.0;  // in (0, 1/2)
  SeedStrategy strategy = SeedStrategy::RandomBaseline;
  std::vector<Node> seed_hint;           // for Explicit
  std::vector<Color> seed_hint_colors;   // optional, strong Explicit only
};

// Rounding used throughout for alpha*n and (1/2+epsilon)*k: half rounds up.
std::uint64_t round_half_up_count(double x);

// Definition of the strong attacker: |R0| = round(alpha*n), exactly
// round((1/2+epsilon)*|R0|) seeds white, the rest black.
SeedColoring strong_seed(const Graph& g, const AttackerSpec& spec, Rng& rng);

// Moderate attacker: seed set of size round(alpha*n) by strategy, each seed
// independently white w.p. (1/2+epsilon). Color coins are consumed in
// ascending node order.
SeedColoring moderate_seed(const Graph& g, const AttackerSpec& spec, Rng& rng);

// Weak attacker: every node independently a seed w.p. alpha, each seed
// independently white w.p. (1/2+epsilon). May return an empty coloring.
// Coins per node in ascending order; the color coin is drawn immediately
// after a successful seed coin.
SeedColoring weak_seed(const Graph& g, const AttackerSpec& spec, Rng& rng);

SeedColoring attacker_seed(const Graph& g, const AttackerSpec& spec, Rng& rng);

}  // namespace opforge
