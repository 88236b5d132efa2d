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

#include <algorithm>
#include <optional>
#include <vector>

#include "opforge/diffusion.hpp"
#include "opforge/generators.hpp"
#include "opforge/graph.hpp"
#include "opforge/rng.hpp"

namespace opforge::testing {

// Reference implementation of the synchronous process: every round scans all
// nodes and applies the update rule against a snapshot of the previous
// colors. Deliberately independent of the frontier-based engine; coins are
// consumed per tying node in ascending node order, matching the engine's
// documented order.
struct NaiveResult {
  std::vector<RoundCounts> per_round;
  std::vector<Color> colors;
  std::optional<std::uint32_t> stabilization;
};

inline NaiveResult naive_diffusion(const Graph& g, const SeedColoring& seed,
                                   RoundLimit rounds, TieRule tie, Rng& rng) {
  const Node n = g.node_count();
  NaiveResult out;
  out.colors.assign(n, Color::Uncolored);
  RoundCounts r0;
  for (std::size_t i = 0; i < seed.nodes.size(); ++i) {
    out.colors[seed.nodes[i]] = seed.colors[i];
    ++r0.colored;
    if (seed.colors[i] == Color::Black) ++r0.black;
    else ++r0.white;
  }
  out.per_round.push_back(r0);

  std::uint32_t t = 0;
  for (;;) {
    // Does any uncolored node have a colored neighbor?
    bool frontier_exists = false;
    for (Node v = 0; v < n && !frontier_exists; ++v) {
      if (out.colors[v] != Color::Uncolored) continue;
      for (Node u : g.neighbors(v)) {
        if (out.colors[u] != Color::Uncolored) {
          frontier_exists = true;
          break;
        }
      }
    }
    if (!frontier_exists) {
      out.stabilization = t;
      break;
    }
    if (rounds && t >= *rounds) break;
    ++t;

    std::vector<Color> snapshot = out.colors;
    RoundCounts counts;
    for (Node v = 0; v < n; ++v) {
      if (snapshot[v] != Color::Uncolored) continue;
      std::uint32_t black = 0, white = 0;
      for (Node u : g.neighbors(v)) {
        if (snapshot[u] == Color::Black) ++black;
        else if (snapshot[u] == Color::White) ++white;
      }
      if (black == 0 && white == 0) continue;
      Color c;
      if (black > white) c = Color::Black;
      else if (white > black) c = Color::White;
      else if (tie == TieRule::AlwaysBlack) c = Color::Black;
      else if (tie == TieRule::AlwaysWhite) c = Color::White;
      else c = rng.fair_coin() ? Color::Black : Color::White;
      out.colors[v] = c;
      ++counts.colored;
      if (c == Color::Black) ++counts.black;
      else ++counts.white;
    }
    out.per_round.push_back(counts);
  }
  return out;
}

// Simple connected random graph for property tests: a random spanning tree
// plus extra random edges.
inline Graph random_connected_graph(Node n, double extra_edge_factor,
                                    Rng& rng) {
  std::vector<Edge> edges;
  std::vector<Node> order(n);
  for (Node v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  for (Node i = 1; i < n; ++i) {
    Node parent = order[rng.uniform_below(i)];
    edges.emplace_back(order[i], parent);
  }
  const std::uint64_t extra =
      static_cast<std::uint64_t>(extra_edge_factor * n);
  for (std::uint64_t i = 0; i < extra; ++i) {
    Node u = static_cast<Node>(rng.uniform_below(n));
    Node v = static_cast<Node>(rng.uniform_below(n));
    if (u != v) edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

inline SeedColoring random_seed_coloring(const Graph& g, std::uint64_t count,
                                         Rng& rng) {
  std::vector<Node> pool(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) pool[v] = v;
  rng.shuffle(pool);
  pool.resize(count);
  std::vector<Color> colors;
  colors.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    colors.push_back(rng.fair_coin() ? Color::Black : Color::White);
  }
  return SeedColoring::make(std::move(pool), std::move(colors),
                            g.node_count());
}

}  // namespace opforge::testing
