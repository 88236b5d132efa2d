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

#include "opforge/diffusion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace opforge {

std::uint64_t SeedColoring::count(Color c) const {
  return static_cast<std::uint64_t>(std::count(colors.begin(), colors.end(), c));
}

SeedColoring SeedColoring::make(std::vector<Node> nodes,
                                std::vector<Color> colors, Node n) {
  if (nodes.size() != colors.size()) {
    throw Error(ErrorCode::InvalidParameters,
                "seed node and color lists differ in length");
  }
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });
  SeedColoring out;
  out.nodes.reserve(nodes.size());
  out.colors.reserve(nodes.size());
  for (std::size_t idx : order) {
    Node v = nodes[idx];
    if (v >= n) {
      throw Error(ErrorCode::NodeOutOfRange,
                  "seed " + std::to_string(v) + " out of range");
    }
    if (!out.nodes.empty() && out.nodes.back() == v) {
      throw Error(ErrorCode::InvalidParameters,
                  "duplicate seed " + std::to_string(v));
    }
    if (colors[idx] == Color::Uncolored) {
      throw Error(ErrorCode::InvalidParameters, "seed colored Uncolored");
    }
    out.nodes.push_back(v);
    out.colors.push_back(colors[idx]);
  }
  return out;
}

const RoundCounts& DiffusionTrace::at(std::uint32_t t) const {
  if (t < per_round_.size()) return per_round_[t];
  if (stabilized()) return per_round_.back();
  throw Error(ErrorCode::RoundOutOfRange,
              "round " + std::to_string(t) + " beyond recorded rounds");
}

std::uint64_t DiffusionTrace::colored_cum(std::uint32_t t) const {
  at(t);  // range check
  std::uint64_t sum = 0;
  for (std::uint32_t i = 0; i <= std::min<std::uint32_t>(t, rounds()); ++i) {
    sum += per_round_[i].colored;
  }
  return sum;
}

std::uint64_t DiffusionTrace::black_cum(std::uint32_t t) const {
  at(t);
  std::uint64_t sum = 0;
  for (std::uint32_t i = 0; i <= std::min<std::uint32_t>(t, rounds()); ++i) {
    sum += per_round_[i].black;
  }
  return sum;
}

std::uint64_t DiffusionTrace::white_cum(std::uint32_t t) const {
  at(t);
  std::uint64_t sum = 0;
  for (std::uint32_t i = 0; i <= std::min<std::uint32_t>(t, rounds()); ++i) {
    sum += per_round_[i].white;
  }
  return sum;
}

DiffusionTrace run_diffusion(const Graph& g, const SeedColoring& seed,
                             RoundLimit rounds, TieRule tie, Rng& rng,
                             bool record_layers) {
  const Node n = g.node_count();
  if (seed.nodes.empty()) {
    throw Error(ErrorCode::EmptySeedSet, "seed set is empty");
  }
  for (Node v : seed.nodes) {
    if (v >= n) {
      throw Error(ErrorCode::NodeOutOfRange,
                  "seed " + std::to_string(v) + " out of range");
    }
  }

  std::vector<Color> colors(n, Color::Uncolored);
  // dist doubles as the visited marker; the set colored in round t is exactly
  // the BFS layer N_t(R_0), since a node's first colored neighbor appears one
  // layer before it.
  std::vector<std::int32_t> dist(n, -1);

  std::vector<RoundCounts> per_round;
  std::vector<std::vector<Node>> layers;
  std::uint64_t ties = 0;

  std::vector<Node> frontier;
  frontier.reserve(seed.nodes.size());
  RoundCounts seed_counts;
  for (std::size_t i = 0; i < seed.nodes.size(); ++i) {
    Node v = seed.nodes[i];
    colors[v] = seed.colors[i];
    dist[v] = 0;
    frontier.push_back(v);
    ++seed_counts.colored;
    if (seed.colors[i] == Color::Black) ++seed_counts.black;
    else ++seed_counts.white;
  }
  per_round.push_back(seed_counts);
  if (record_layers) layers.push_back(frontier);

  std::optional<std::uint32_t> stabilization;
  std::uint32_t t = 0;
  std::vector<Node> next;
  for (;;) {
    // Discover round t+1 before deciding whether to run it, so a trace cut
    // off by the round limit can tell whether it had in fact stabilized.
    next.clear();
    for (Node v : frontier) {
      for (Node u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = static_cast<std::int32_t>(t) + 1;
          next.push_back(u);
        }
      }
    }
    if (next.empty()) {
      stabilization = t;
      break;
    }
    if (rounds && t >= *rounds) break;
    ++t;
    std::sort(next.begin(), next.end());

    RoundCounts counts;
    counts.colored = next.size();
    for (Node v : next) {
      std::uint32_t black = 0;
      std::uint32_t white = 0;
      for (Node u : g.neighbors(v)) {
        // Colored by end of round t-1 means dist == t-1 (earlier layers
        // cannot be adjacent).
        if (dist[u] == static_cast<std::int32_t>(t) - 1) {
          if (colors[u] == Color::Black) ++black;
          else ++white;
        }
      }
      Color decided;
      if (black > white) {
        decided = Color::Black;
      } else if (white > black) {
        decided = Color::White;
      } else {
        ++ties;
        switch (tie) {
          case TieRule::FairCoin:
            decided = rng.fair_coin() ? Color::Black : Color::White;
            break;
          case TieRule::AlwaysBlack:
            decided = Color::Black;
            break;
          case TieRule::AlwaysWhite:
            decided = Color::White;
            break;
          default:
            decided = Color::Black;
            break;
        }
      }
      colors[v] = decided;
      if (decided == Color::Black) ++counts.black;
      else ++counts.white;
    }
    per_round.push_back(counts);
    if (record_layers) layers.push_back(next);
    frontier.swap(next);
  }

  return DiffusionTrace(n, std::move(per_round), stabilization,
                        std::move(colors), ties, std::move(layers));
}

bool attacker_wins(const DiffusionTrace& trace, std::uint32_t t, WinMode mode) {
  switch (mode) {
    case WinMode::ColoredMajority:
      return trace.black_cum(t) >= trace.white_cum(t);
    case WinMode::PopulationMajority:
      return 2 * trace.black_cum(t) > trace.node_count();
  }
  return false;
}

std::uint32_t stabilization_time(const DiffusionTrace& trace) {
  for (Color c : trace.final_colors()) {
    if (c == Color::Uncolored) {
      throw Error(ErrorCode::Disconnected,
                  "some node was never colored (unreachable seed component "
                  "or round limit hit)");
    }
  }
  // All nodes colored, so the trace stabilized; r-hat at stabilization is n.
  return *trace.stabilization();
}

}  // namespace opforge
