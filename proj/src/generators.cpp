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

#include "opforge/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace opforge {

namespace {

std::uint64_t round_half_up(double x) {
  return static_cast<std::uint64_t>(std::floor(x + 0.5));
}

std::uint64_t edge_key(Node u, Node v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// d-regular circulant on nodes [base, base+count): offsets 1..d/2, plus the
// antipode when d is odd (requires even count).
void append_circulant(std::vector<Edge>& edges, Node base, Node count,
                      std::uint32_t d) {
  if (count < d + 1) {
    throw Error(ErrorCode::InvalidSpec,
                "circulant component of size " + std::to_string(count) +
                    " cannot be " + std::to_string(d) + "-regular");
  }
  if (d % 2 == 1 && count % 2 == 1) {
    throw Error(ErrorCode::NonIntegralPartition,
                "odd-degree circulant needs an even component size");
  }
  for (Node i = 0; i < count; ++i) {
    for (std::uint32_t k = 1; k <= d / 2; ++k) {
      edges.emplace_back(base + i, base + (i + k) % count);
    }
    if (d % 2 == 1) {
      Node j = (i + count / 2) % count;
      if (i < j) edges.emplace_back(base + i, base + j);
    }
  }
}

}  // namespace

Graph star(Node n) {
  if (n < 2) throw Error(ErrorCode::InvalidSpec, "star needs n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Node v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::build(n, edges);
}

Graph cycle_power(Node n, std::uint32_t delta) {
  if (delta < 1 || n < 2 * delta + 1) {
    throw Error(ErrorCode::InvalidSpec,
                "cycle power needs n >= 2*delta+1 and delta >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * delta);
  for (Node i = 0; i < n; ++i) {
    for (std::uint32_t k = 1; k <= delta; ++k) {
      edges.emplace_back(i, (i + k) % n);
    }
  }
  return Graph::build(n, edges);
}

Graph dary_tree(std::uint32_t depth, std::uint32_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidSpec, "d-ary tree needs d >= 2");
  std::uint64_t nodes = 1;
  std::uint64_t level = 1;
  for (std::uint32_t i = 0; i < depth; ++i) {
    level *= d;
    nodes += level;
    if (nodes > 100'000'000ULL) {
      throw Error(ErrorCode::InvalidSpec, "d-ary tree too large");
    }
  }
  return dary_tree_of_size(static_cast<Node>(nodes), d);
}

Graph dary_tree_of_size(Node size, std::uint32_t d) {
  if (size < 1 || d < 2) {
    throw Error(ErrorCode::InvalidSpec, "tree needs size >= 1 and d >= 2");
  }
  std::vector<Edge> edges;
  edges.reserve(size > 0 ? size - 1 : 0);
  for (Node i = 1; i < size; ++i) edges.emplace_back((i - 1) / d, i);
  return Graph::build(size, edges);
}

Graph clique_union(const std::vector<Node>& sizes) {
  if (sizes.empty()) {
    throw Error(ErrorCode::InvalidSpec, "clique union needs at least one size");
  }
  std::uint64_t total = 0;
  for (Node s : sizes) {
    if (s < 1) throw Error(ErrorCode::InvalidSpec, "clique size must be >= 1");
    total += s;
  }
  std::vector<Edge> edges;
  Node base = 0;
  for (Node s : sizes) {
    for (Node i = 0; i < s; ++i) {
      for (Node j = i + 1; j < s; ++j) {
        edges.emplace_back(base + i, base + j);
      }
    }
    base += s;
  }
  return Graph::build(static_cast<Node>(total), edges);
}

Graph random_regular(Node n, std::uint32_t d, Rng& rng,
                     std::uint32_t retry_cap) {
  if (d < 1 || d >= n || (static_cast<std::uint64_t>(n) * d) % 2 != 0) {
    throw Error(ErrorCode::InvalidSpec,
                "random regular needs 1 <= d < n and n*d even");
  }
  const std::uint64_t stub_count = static_cast<std::uint64_t>(n) * d;
  std::vector<Node> stubs(stub_count);
  {
    std::size_t idx = 0;
    for (Node v = 0; v < n; ++v) {
      for (std::uint32_t i = 0; i < d; ++i) stubs[idx++] = v;
    }
  }

  auto pair_once = [&](std::vector<Edge>& edges) {
    edges.clear();
    rng.shuffle(stubs);
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
  };

  auto is_simple = [&](const std::vector<Edge>& edges) {
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
      if (u == v) return false;
      if (!seen.emplace(edge_key(u, v), 1).second) return false;
    }
    return true;
  };

  // Pure restarts only have a realistic chance when the expected number of
  // pairing defects is small.
  const double dd = static_cast<double>(d);
  const double expected_defects = (dd - 1.0) / 2.0 + (dd - 1.0) * (dd - 1.0) / 4.0;
  std::vector<Edge> edges;
  if (expected_defects <= 16.0) {
    for (std::uint32_t attempt = 0; attempt < retry_cap; ++attempt) {
      pair_once(edges);
      if (is_simple(edges)) return Graph::build(n, edges);
    }
  } else {
    pair_once(edges);
    if (is_simple(edges)) return Graph::build(n, edges);
  }

  // Swap-repair: resolve self-loops and duplicate edges by double-edge swaps,
  // which preserve every degree. Each accepted swap inserts only edges that
  // are currently absent, so the defect count strictly decreases.
  std::unordered_map<std::uint64_t, std::uint32_t> count;
  count.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) ++count[edge_key(u, v)];
  auto defective = [&](const Edge& e) {
    return e.first == e.second || count[edge_key(e.first, e.second)] > 1;
  };
  std::vector<std::size_t> dirty(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) dirty[i] = i;

  std::uint64_t proposals = 0;
  const std::uint64_t proposal_cap = 500 * std::max<std::uint64_t>(edges.size(), 1);
  while (!dirty.empty()) {
    std::size_t i = dirty.back();
    if (!defective(edges[i])) {
      dirty.pop_back();
      continue;
    }
    auto [u, v] = edges[i];
    bool fixed = false;
    while (!fixed) {
      if (++proposals > proposal_cap) {
        throw Error(ErrorCode::GenerationRetriesExhausted,
                    "random regular swap repair exceeded proposal cap");
      }
      std::size_t j = static_cast<std::size_t>(rng.uniform_below(edges.size()));
      if (j == i) continue;
      auto [x, y] = edges[j];
      if (rng.fair_coin()) std::swap(x, y);
      if (u == x || v == y) continue;
      std::uint64_t k1 = edge_key(u, x);
      std::uint64_t k2 = edge_key(v, y);
      if (k1 == k2 || count[k1] > 0 || count[k2] > 0) continue;
      --count[edge_key(u, v)];
      --count[edge_key(x, y)];
      ++count[k1];
      ++count[k2];
      edges[i] = {u, x};
      edges[j] = {v, y};
      dirty.push_back(j);
      fixed = true;
    }
  }
  return Graph::build(n, edges);
}

Graph erdos_renyi(Node n, double p, Rng& rng) {
  if (p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::InvalidSpec, "edge probability must be in [0,1]");
  }
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return Graph::build(n, edges);
}

Graph generate(const FamilySpec& spec, Rng& rng) {
  switch (spec.family) {
    case Family::Star:
      return star(spec.n);
    case Family::CyclePower:
      return cycle_power(spec.n, spec.delta);
    case Family::DaryTree:
      return dary_tree(spec.depth, spec.d);
    case Family::CliqueUnion:
      return clique_union(spec.clique_sizes);
    case Family::RandomRegular:
      return random_regular(spec.n, spec.d, rng, spec.retry_cap);
    case Family::ErdosRenyi:
      return erdos_renyi(spec.n, spec.p, rng);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

namespace {

CounterexampleArtifact make_regular_non_expander(const CounterexampleSpec& spec) {
  if (spec.alpha <= 0.0 || spec.alpha >= 1.0 || spec.epsilon <= 0.0 ||
      spec.epsilon >= 0.5 || spec.d < 2 || spec.n < 4) {
    throw Error(ErrorCode::InvalidSpec, "regular-non-expander parameters");
  }
  const Node n1 =
      static_cast<Node>(round_half_up((0.5 + spec.epsilon) * spec.alpha * spec.n));
  if (n1 >= spec.n) {
    throw Error(ErrorCode::InvalidSpec, "white component swallows the graph");
  }
  const Node n2 = spec.n - n1;
  const Node black_count =
      static_cast<Node>(round_half_up((0.5 - spec.epsilon) * spec.alpha * spec.n));
  if (black_count < 1 || black_count > n2) {
    throw Error(ErrorCode::InvalidSpec, "black seed count out of range");
  }
  std::vector<Edge> edges;
  append_circulant(edges, 0, n1, spec.d);
  append_circulant(edges, n1, n2, spec.d);

  CounterexampleArtifact out;
  out.graph = Graph::build(spec.n, edges);
  std::vector<Node> seeds;
  std::vector<Color> colors;
  for (Node v = 0; v < n1; ++v) {
    seeds.push_back(v);
    colors.push_back(Color::White);
  }
  for (Node v = n1; v < n1 + black_count; ++v) {
    seeds.push_back(v);
    colors.push_back(Color::Black);
  }
  out.seed_hint = seeds;
  out.prescribed = SeedColoring::make(seeds, colors, spec.n);
  out.roles.resize(spec.n);
  for (Node v = 0; v < spec.n; ++v) {
    out.roles[v] = v < n1 ? "component:0" : "component:1";
  }
  out.derived = {{"white_component", static_cast<double>(n1)},
                 {"black_seeds", static_cast<double>(black_count)}};
  return out;
}

CounterexampleArtifact make_prop1_cycle_trees(const CounterexampleSpec& spec) {
  if (spec.alpha <= 0.0 || spec.alpha >= 0.5 || spec.epsilon <= 0.0 ||
      spec.epsilon >= 0.5 || spec.mu <= 0.0 || spec.mu >= 1.0 || spec.t < 1) {
    throw Error(ErrorCode::InvalidSpec, "cycle-trees parameters");
  }
  const std::uint64_t s = static_cast<std::uint64_t>(
      std::floor(std::log2(1.0 / spec.mu) / (2.0 + 8.0 * spec.epsilon)));
  if (s < 1) {
    throw Error(ErrorCode::InvalidSpec,
                "construction requires s >= 1 (mu too large for epsilon)");
  }
  const std::uint64_t seed_budget = round_half_up(spec.alpha * spec.n);
  if (seed_budget <= s + 2) {
    throw Error(ErrorCode::InvalidSpec, "alpha*n too small for the cycle");
  }
  const Node cycle_size = static_cast<Node>(seed_budget - s);
  if (cycle_size < 3 || cycle_size >= spec.n) {
    throw Error(ErrorCode::NonIntegralPartition, "cycle size out of range");
  }
  const Node tree_total = spec.n - cycle_size;
  const Node tree_base = tree_total / static_cast<Node>(s);
  if (tree_base < 1) {
    throw Error(ErrorCode::NonIntegralPartition, "trees would be empty");
  }
  const std::uint32_t d = static_cast<std::uint32_t>(std::max<std::uint64_t>(
      2, round_half_up(std::pow(
             (3.0 * spec.alpha * spec.epsilon * spec.n + 1.0) / static_cast<double>(s),
             1.0 / spec.t))));

  std::vector<Edge> edges;
  for (Node i = 0; i < cycle_size; ++i) {
    edges.emplace_back(i, (i + 1) % cycle_size);
  }
  CounterexampleArtifact out;
  out.roles.assign(spec.n, "cycle");
  out.seed_hint.reserve(seed_budget);
  for (Node v = 0; v < cycle_size; ++v) out.seed_hint.push_back(v);

  Node base = cycle_size;
  for (std::uint64_t tree = 0; tree < s; ++tree) {
    // Last tree absorbs the remainder.
    const Node size = (tree + 1 == s)
                          ? static_cast<Node>(tree_total - tree_base * (s - 1))
                          : tree_base;
    out.seed_hint.push_back(base);  // root
    out.roles[base] = "tree_root:" + std::to_string(tree);
    for (Node i = 1; i < size; ++i) {
      edges.emplace_back(base + (i - 1) / d, base + i);
      out.roles[base + i] = "tree:" + std::to_string(tree);
    }
    base += size;
  }
  out.graph = Graph::build(spec.n, edges);
  out.derived = {{"s", static_cast<double>(s)},
                 {"d", static_cast<double>(d)},
                 {"cycle_size", static_cast<double>(cycle_size)},
                 {"tree_base_size", static_cast<double>(tree_base)}};
  return out;
}

CounterexampleArtifact make_core_dominated(const CounterexampleSpec& spec) {
  if (spec.s < 1 || spec.s >= spec.n) {
    throw Error(ErrorCode::InvalidSpec, "core size must satisfy 1 <= s < n");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.s) * (spec.n - spec.s));
  for (Node c = 0; c < spec.s; ++c) {
    for (Node v = spec.s; v < spec.n; ++v) edges.emplace_back(c, v);
  }
  CounterexampleArtifact out;
  out.graph = Graph::build(spec.n, edges);
  out.roles.assign(spec.n, "outer");
  for (Node c = 0; c < spec.s; ++c) {
    out.roles[c] = "core";
    out.seed_hint.push_back(c);
  }
  out.derived = {{"core_size", static_cast<double>(spec.s)}};
  return out;
}

CounterexampleArtifact make_star_forest(const CounterexampleSpec& spec) {
  if (spec.s < 1 || spec.n / spec.s < 2) {
    throw Error(ErrorCode::InvalidSpec,
                "star forest needs at least 2 nodes per star");
  }
  const Node base_size = spec.n / spec.s;
  std::vector<Edge> edges;
  CounterexampleArtifact out;
  out.roles.assign(spec.n, "");
  Node base = 0;
  for (std::uint32_t star_i = 0; star_i < spec.s; ++star_i) {
    const Node size = (star_i + 1 == spec.s) ? spec.n - base : base_size;
    out.seed_hint.push_back(base);
    out.roles[base] = "star_center:" + std::to_string(star_i);
    for (Node leaf = 1; leaf < size; ++leaf) {
      edges.emplace_back(base, base + leaf);
      out.roles[base + leaf] = "star_leaf:" + std::to_string(star_i);
    }
    base += size;
  }
  out.graph = Graph::build(spec.n, edges);
  out.derived = {{"star_count", static_cast<double>(spec.s)},
                 {"star_base_size", static_cast<double>(base_size)}};
  return out;
}

}  // namespace

CounterexampleArtifact generate_counterexample(const CounterexampleSpec& spec,
                                               Rng& rng) {
  (void)rng;  // All four constructions are deterministic given the spec.
  switch (spec.kind) {
    case Counterexample::RegularNonExpander:
      return make_regular_non_expander(spec);
    case Counterexample::Prop1CycleTrees:
      return make_prop1_cycle_trees(spec);
    case Counterexample::CoreDominated:
      return make_core_dominated(spec);
    case Counterexample::StarForest:
      return make_star_forest(spec);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown counterexample kind");
}

}  // namespace opforge
