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

#include "opforge/attackers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace opforge {

std::uint64_t round_half_up_count(double x) {
  return static_cast<std::uint64_t>(std::floor(x + 0.5));
}

namespace {

void check_parameters(const AttackerSpec& spec) {
  if (spec.alpha <= 0.0 || spec.alpha >= 0.5 || spec.epsilon <= 0.0 ||
      spec.epsilon >= 0.5) {
    throw Error(ErrorCode::InvalidParameters,
                "alpha and epsilon must lie in (0, 1/2)");
  }
}

std::vector<Node> nodes_by_degree_desc(const Graph& g) {
  std::vector<Node> order(g.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

std::vector<Node> uniform_subset(Node n, std::uint64_t k, Rng& rng) {
  std::vector<Node> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  // Partial Fisher-Yates: the first k entries form a uniform subset.
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t j = i + rng.uniform_below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::vector<Node> pick_seed_set(const Graph& g, const AttackerSpec& spec,
                                std::uint64_t k, Rng& rng) {
  switch (spec.strategy) {
    case SeedStrategy::Explicit: {
      if (spec.seed_hint.size() != k) {
        throw Error(ErrorCode::HintSizeMismatch,
                    "hint has " + std::to_string(spec.seed_hint.size()) +
                        " nodes, expected " + std::to_string(k));
      }
      return spec.seed_hint;
    }
    case SeedStrategy::DegreeGreedyBlack:
    case SeedStrategy::DegreeGreedy: {
      auto order = nodes_by_degree_desc(g);
      order.resize(k);
      return order;
    }
    case SeedStrategy::RandomBaseline:
      return uniform_subset(g.node_count(), k, rng);
    case SeedStrategy::ComponentSplit:
      throw Error(ErrorCode::StrategyInapplicable,
                  "component split picks colors, not just a set");
  }
  throw Error(ErrorCode::InvalidParameters, "unknown strategy");
}

}  // namespace

SeedColoring strong_seed(const Graph& g, const AttackerSpec& spec, Rng& rng) {
  check_parameters(spec);
  const Node n = g.node_count();
  const std::uint64_t k = round_half_up_count(spec.alpha * n);
  if (k < 1) {
    throw Error(ErrorCode::InvalidParameters,
                "alpha*n rounds to an empty seed set");
  }
  const std::uint64_t white_count =
      round_half_up_count((0.5 + spec.epsilon) * static_cast<double>(k));

  if (spec.strategy == SeedStrategy::ComponentSplit) {
    auto components = connected_components(g);
    if (components.size() < 2) {
      throw Error(ErrorCode::StrategyInapplicable,
                  "component split needs a disconnected graph");
    }
    const std::vector<Node>* white_comp = nullptr;
    for (const auto& comp : components) {
      if (comp.size() == white_count) {
        white_comp = &comp;
        break;
      }
    }
    if (white_comp == nullptr) {
      throw Error(ErrorCode::StrategyInapplicable,
                  "no component matches the white seed count " +
                      std::to_string(white_count));
    }
    std::vector<bool> in_white(n, false);
    for (Node v : *white_comp) in_white[v] = true;
    std::vector<Node> nodes(white_comp->begin(), white_comp->end());
    std::vector<Color> colors(nodes.size(), Color::White);
    std::uint64_t black_left = k - white_count;
    for (Node v = 0; v < n && black_left > 0; ++v) {
      if (!in_white[v]) {
        nodes.push_back(v);
        colors.push_back(Color::Black);
        --black_left;
      }
    }
    if (black_left > 0) {
      throw Error(ErrorCode::StrategyInapplicable,
                  "not enough nodes outside the white component");
    }
    return SeedColoring::make(std::move(nodes), std::move(colors), n);
  }

  // A fully prescribed coloring (e.g. from a generator sidecar) is taken
  // verbatim; its budget comes from the construction, which may round the
  // two color counts independently.
  if (spec.strategy == SeedStrategy::Explicit &&
      !spec.seed_hint_colors.empty()) {
    if (spec.seed_hint_colors.size() != spec.seed_hint.size() ||
        spec.seed_hint.empty()) {
      throw Error(ErrorCode::HintSizeMismatch, "hint coloring size mismatch");
    }
    return SeedColoring::make(spec.seed_hint, spec.seed_hint_colors, n);
  }

  std::vector<Node> seeds = pick_seed_set(g, spec, k, rng);
  std::vector<Color> colors(seeds.size(), Color::White);
  const std::uint64_t black_count = k - white_count;
  switch (spec.strategy) {
    case SeedStrategy::DegreeGreedyBlack: {
      // Seeds arrive sorted by descending degree; black the strongest ones.
      for (std::uint64_t i = 0; i < black_count; ++i) colors[i] = Color::Black;
      break;
    }
    case SeedStrategy::Explicit: {
      // Without explicit colors: whites first in hint order.
      for (std::uint64_t i = white_count; i < k; ++i) colors[i] = Color::Black;
      break;
    }
    case SeedStrategy::RandomBaseline: {
      std::vector<std::size_t> idx(seeds.size());
      std::iota(idx.begin(), idx.end(), 0);
      rng.shuffle(idx);
      for (std::uint64_t i = 0; i < black_count; ++i) {
        colors[idx[i]] = Color::Black;
      }
      break;
    }
    default:
      break;
  }
  return SeedColoring::make(std::move(seeds), std::move(colors),
                            g.node_count());
}

SeedColoring moderate_seed(const Graph& g, const AttackerSpec& spec, Rng& rng) {
  check_parameters(spec);
  if (spec.strategy == SeedStrategy::DegreeGreedyBlack ||
      spec.strategy == SeedStrategy::ComponentSplit) {
    throw Error(ErrorCode::StrategyInapplicable,
                "moderate attackers cannot choose colors");
  }
  const std::uint64_t k = round_half_up_count(spec.alpha * g.node_count());
  std::vector<Node> seeds = pick_seed_set(g, spec, k, rng);
  std::sort(seeds.begin(), seeds.end());
  std::vector<Color> colors(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    colors[i] =
        rng.bernoulli(0.5 + spec.epsilon) ? Color::White : Color::Black;
  }
  return SeedColoring::make(std::move(seeds), std::move(colors),
                            g.node_count());
}

SeedColoring weak_seed(const Graph& g, const AttackerSpec& spec, Rng& rng) {
  if (spec.alpha < 0.0 || spec.alpha > 1.0 || spec.epsilon <= 0.0 ||
      spec.epsilon >= 0.5) {
    throw Error(ErrorCode::InvalidParameters,
                "weak attacker needs alpha in [0,1], epsilon in (0, 1/2)");
  }
  std::vector<Node> seeds;
  std::vector<Color> colors;
  for (Node v = 0; v < g.node_count(); ++v) {
    if (rng.bernoulli(spec.alpha)) {
      seeds.push_back(v);
      colors.push_back(rng.bernoulli(0.5 + spec.epsilon) ? Color::White
                                                         : Color::Black);
    }
  }
  return SeedColoring::make(std::move(seeds), std::move(colors),
                            g.node_count());
}

SeedColoring attacker_seed(const Graph& g, const AttackerSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case AttackerKind::Strong:
      return strong_seed(g, spec, rng);
    case AttackerKind::Moderate:
      return moderate_seed(g, spec, rng);
    case AttackerKind::Weak:
      return weak_seed(g, spec, rng);
  }
  throw Error(ErrorCode::InvalidParameters, "unknown attacker kind");
}

}  // namespace opforge
