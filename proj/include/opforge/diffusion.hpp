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

#include "opforge/graph.hpp"
#include "opforge/rng.hpp"

namespace opforge {

enum class Color : std::uint8_t { Uncolored = 0, Black = 1, White = 2 };

enum class TieRule : std::uint8_t { FairCoin, AlwaysBlack, AlwaysWhite };

enum class WinMode : std::uint8_t { ColoredMajority, PopulationMajority };

// The initially colored nodes and their colors. Nodes are kept sorted and
// unique; colors align with nodes.
struct SeedColoring {
  std::vector<Node> nodes;
  std::vector<Color> colors;

  std::size_t size() const { return nodes.size(); }
  std::uint64_t count(Color c) const;

  // Sorts by node id, validates uniqueness, range and colors.
  static SeedColoring make(std::vector<Node> nodes, std::vector<Color> colors,
                           Node n);
};

// nullopt means run until no uncolored node has a colored neighbor.
using RoundLimit = std::optional<std::uint32_t>;

struct RoundCounts {
  std::uint64_t colored = 0;  // r_t
  std::uint64_t black = 0;    // b_t
  std::uint64_t white = 0;    // w_t
};

// Per-round bookkeeping of one synchronous run. Cumulative counts are exposed
// through accessors; rounds() is the last simulated round index. When the
// process stabilized (no reachable uncolored node left), queries past the last
// round return the (constant) final values.
class DiffusionTrace {
 public:
  DiffusionTrace(Node n, std::vector<RoundCounts> per_round,
                 std::optional<std::uint32_t> stabilization,
                 std::vector<Color> final_colors, std::uint64_t ties,
                 std::vector<std::vector<Node>> layers)
      : n_(n),
        per_round_(std::move(per_round)),
        stabilization_(stabilization),
        final_colors_(std::move(final_colors)),
        ties_(ties),
        layers_(std::move(layers)) {}

  Node node_count() const { return n_; }
  std::uint32_t rounds() const {
    return static_cast<std::uint32_t>(per_round_.size()) - 1;
  }
  const std::vector<RoundCounts>& per_round() const { return per_round_; }

  std::uint64_t colored_at(std::uint32_t t) const { return at(t).colored; }
  std::uint64_t black_at(std::uint32_t t) const { return at(t).black; }
  std::uint64_t white_at(std::uint32_t t) const { return at(t).white; }

  std::uint64_t colored_cum(std::uint32_t t) const;  // r-hat
  std::uint64_t black_cum(std::uint32_t t) const;    // b-hat
  std::uint64_t white_cum(std::uint32_t t) const;    // w-hat

  // Round at which every reachable node was colored; nullopt if the run was
  // cut off by a round limit first.
  std::optional<std::uint32_t> stabilization() const { return stabilization_; }
  bool stabilized() const { return stabilization_.has_value(); }

  const std::vector<Color>& final_colors() const { return final_colors_; }
  std::uint64_t tie_count() const { return ties_; }

  // Opt-in full history: layers[t] = nodes colored in round t (ascending).
  const std::vector<std::vector<Node>>& layers() const { return layers_; }
  bool has_layers() const { return !layers_.empty(); }

 private:
  const RoundCounts& at(std::uint32_t t) const;

  Node n_;
  std::vector<RoundCounts> per_round_;
  std::optional<std::uint32_t> stabilization_;
  std::vector<Color> final_colors_;
  std::uint64_t ties_;
  std::vector<std::vector<Node>> layers_;
};

// Synchronous majority diffusion. In round t every uncolored node with at
// least one colored neighbor adopts the most frequent color among neighbors
// colored by the end of round t-1; equal nonzero counts are a tie resolved by
// the tie rule. FairCoin consumes one coin per tying node per round, in
// ascending node order.
DiffusionTrace run_diffusion(const Graph& g, const SeedColoring& seed,
                             RoundLimit rounds, TieRule tie, Rng& rng,
                             bool record_layers = false);

// ColoredMajority: b-hat >= w-hat at round t (a tie counts as a win).
// PopulationMajority: b-hat > n/2. Rounds past stabilization are constant and
// allowed; past an unstabilized trace's last round it throws RoundOutOfRange.
bool attacker_wins(const DiffusionTrace& trace, std::uint32_t t, WinMode mode);

// Smallest t with r-hat_t = n. Throws Disconnected if some node was never
// colored (requires a trace that ran to stabilization on a connected graph).
std::uint32_t stabilization_time(const DiffusionTrace& trace);

}  // namespace opforge
