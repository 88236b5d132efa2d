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

#include "opforge/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "opforge/rng.hpp"

namespace opforge {

std::string role_to_string(const NodeRole& role) {
  switch (role.kind) {
    case NodeRoleKind::VOriginal:
      return "v_original:" + std::to_string(role.index);
    case NodeRoleKind::VGadget:
      return "v_gadget:" + std::to_string(role.index);
    case NodeRoleKind::UEdge:
      return "u_edge:" + std::to_string(role.index);
    case NodeRoleKind::UGadget:
      return "u_gadget:" + std::to_string(role.index);
    case NodeRoleKind::QLeaf:
      return "q_leaf:" + std::to_string(role.index);
  }
  return "?";
}

ReductionArtifacts build_mi_instance(const Graph& g_prime, std::uint32_t k,
                                     std::uint32_t s) {
  const std::uint32_t n_prime = g_prime.node_count();
  if (k < 2 || k > n_prime || s < 1) {
    throw Error(ErrorCode::InvalidParameters,
                "reduction needs 2 <= k <= n' and s >= 1");
  }
  ReductionArtifacts art;
  art.source = g_prime;
  art.n_prime = n_prime;
  art.m_prime = static_cast<std::uint32_t>(g_prime.edge_count());
  art.s = s;
  art.k = k;
  art.source_edges = g_prime.edges();

  const std::uint64_t total =
      static_cast<std::uint64_t>(n_prime) * (s + 1) +
      static_cast<std::uint64_t>(art.m_prime) * (s + 2);
  if (total > 5'000'000ULL) {
    throw Error(ErrorCode::InstanceTooLarge, "gadget graph would be huge");
  }
  const Node n = static_cast<Node>(total);

  // Layout: originals, edge nodes, V_i cliques, U_j cliques, leaves.
  art.original_ids.resize(n_prime);
  for (std::uint32_t i = 0; i < n_prime; ++i) art.original_ids[i] = i;
  art.edge_ids.resize(art.m_prime);
  for (std::uint32_t j = 0; j < art.m_prime; ++j) {
    art.edge_ids[j] = n_prime + j;
  }
  const Node v_gadget_base = n_prime + art.m_prime;
  const Node u_gadget_base = v_gadget_base + n_prime * s;
  const Node leaf_base = u_gadget_base + art.m_prime * s;
  art.leaf_ids.resize(art.m_prime);
  for (std::uint32_t j = 0; j < art.m_prime; ++j) {
    art.leaf_ids[j] = leaf_base + j;
  }

  art.roles.resize(n);
  for (std::uint32_t i = 0; i < n_prime; ++i) {
    art.roles[i] = {NodeRoleKind::VOriginal, i};
  }
  for (std::uint32_t j = 0; j < art.m_prime; ++j) {
    art.roles[art.edge_ids[j]] = {NodeRoleKind::UEdge, j};
    art.roles[art.leaf_ids[j]] = {NodeRoleKind::QLeaf, j};
  }

  std::vector<Edge> edges;
  // Each original edge {a, b} becomes a path a - u_j - b.
  for (std::uint32_t j = 0; j < art.m_prime; ++j) {
    edges.emplace_back(art.edge_ids[j], art.source_edges[j].first);
    edges.emplace_back(art.edge_ids[j], art.source_edges[j].second);
    edges.emplace_back(art.edge_ids[j], art.leaf_ids[j]);
  }
  // Clique of size s+1 on {v_i} + V_i.
  for (std::uint32_t i = 0; i < n_prime; ++i) {
    const Node base = v_gadget_base + i * s;
    for (std::uint32_t a = 0; a < s; ++a) {
      art.roles[base + a] = {NodeRoleKind::VGadget, i};
      edges.emplace_back(art.original_ids[i], base + a);
      for (std::uint32_t b = a + 1; b < s; ++b) {
        edges.emplace_back(base + a, base + b);
      }
    }
  }
  // Clique of size s+1 on {u_j} + U_j.
  for (std::uint32_t j = 0; j < art.m_prime; ++j) {
    const Node base = u_gadget_base + j * s;
    for (std::uint32_t a = 0; a < s; ++a) {
      art.roles[base + a] = {NodeRoleKind::UGadget, j};
      edges.emplace_back(art.edge_ids[j], base + a);
      for (std::uint32_t b = a + 1; b < s; ++b) {
        edges.emplace_back(base + a, base + b);
      }
    }
  }

  art.instance.graph = Graph::build(n, edges);
  art.instance.b = k;
  art.instance.w = k * (k - 1) / 2;
  art.instance.t = 2;
  return art;
}

SeedColoring clique_witness_coloring(const ReductionArtifacts& art,
                                     const std::vector<Node>& clique) {
  if (clique.size() != art.k) {
    throw Error(ErrorCode::NotAClique,
                "expected " + std::to_string(art.k) + " clique nodes");
  }
  for (Node v : clique) {
    if (v >= art.n_prime) {
      throw Error(ErrorCode::NotAClique, "clique nodes must come from G'");
    }
  }
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      if (clique[a] == clique[b] || !art.source.has_edge(clique[a], clique[b])) {
        throw Error(ErrorCode::NotAClique,
                    "nodes " + std::to_string(clique[a]) + " and " +
                        std::to_string(clique[b]) + " are not adjacent in G'");
      }
    }
  }
  std::vector<bool> in_clique(art.n_prime, false);
  for (Node v : clique) in_clique[v] = true;

  std::vector<Node> nodes;
  std::vector<Color> colors;
  for (Node v : clique) {
    nodes.push_back(art.original_ids[v]);
    colors.push_back(Color::Black);
  }
  for (std::uint32_t j = 0; j < art.m_prime; ++j) {
    const auto& [a, b] = art.source_edges[j];
    if (in_clique[a] && in_clique[b]) {
      nodes.push_back(art.leaf_ids[j]);
      colors.push_back(Color::White);
    }
  }
  return SeedColoring::make(std::move(nodes), std::move(colors),
                            art.instance.graph.node_count());
}

namespace {

// Shared per-placement simulation state reused across the enumeration to
// avoid reallocation. Layers are recomputed per placement (they depend only
// on the seed set, not the colors).
struct SimScratch {
  std::vector<std::int32_t> dist;
  std::vector<Color> colors;
  std::vector<Node> frontier;
  std::vector<Node> next;
};

struct ForcedRunResult {
  std::uint64_t whites = 0;        // w-hat_t under the forced tie rule
  std::uint64_t round1_ties = 0;   // tie nodes in round 1 (coin-independent)
  std::uint64_t round1_whites = 0; // strict whites through round 1
};

ForcedRunResult forced_run(const Graph& g, const std::vector<Node>& seed_nodes,
                           const std::vector<Color>& seed_colors,
                           std::uint32_t t, TieRule rule, SimScratch& scratch) {
  const Node n = g.node_count();
  scratch.dist.assign(n, -1);
  scratch.colors.assign(n, Color::Uncolored);
  scratch.frontier.clear();
  ForcedRunResult result;
  for (std::size_t i = 0; i < seed_nodes.size(); ++i) {
    Node v = seed_nodes[i];
    scratch.dist[v] = 0;
    scratch.colors[v] = seed_colors[i];
    scratch.frontier.push_back(v);
    if (seed_colors[i] == Color::White) {
      ++result.whites;
      ++result.round1_whites;
    }
  }
  for (std::uint32_t round = 1; round <= t; ++round) {
    scratch.next.clear();
    for (Node v : scratch.frontier) {
      for (Node u : g.neighbors(v)) {
        if (scratch.dist[u] < 0) {
          scratch.dist[u] = static_cast<std::int32_t>(round);
          scratch.next.push_back(u);
        }
      }
    }
    if (scratch.next.empty()) break;
    for (Node v : scratch.next) {
      std::uint32_t black = 0, white = 0;
      for (Node u : g.neighbors(v)) {
        if (scratch.dist[u] == static_cast<std::int32_t>(round) - 1) {
          if (scratch.colors[u] == Color::Black) ++black;
          else ++white;
        }
      }
      Color c;
      if (black > white) {
        c = Color::Black;
      } else if (white > black) {
        c = Color::White;
        if (round == 1) ++result.round1_whites;
      } else {
        if (round == 1) ++result.round1_ties;
        c = (rule == TieRule::AlwaysBlack) ? Color::Black : Color::White;
      }
      scratch.colors[v] = c;
      if (c == Color::White) ++result.whites;
    }
    scratch.frontier.swap(scratch.next);
  }
  return result;
}

// Reusable exact tie-branch enumerator. Whites are tracked incrementally and
// per-round scratch is preallocated, so repeated placement evaluations do not
// allocate. A blown budget reports failure through the return flag; only the
// public entry point converts that into an error.
struct ExactEnumerator {
  const Graph& g;
  std::uint32_t t_max;
  std::vector<std::vector<Node>> layers;
  std::vector<std::vector<Node>> ties_at;
  std::vector<std::vector<Node>> assigned_at;
  std::vector<std::int32_t> dist;
  std::vector<Color> colors;
  std::uint64_t budget = 0;
  std::uint64_t white_count = 0;
  bool blown = false;

  ExactEnumerator(const Graph& graph, std::uint32_t t)
      : g(graph), t_max(t) {
    layers.resize(t_max + 1);
    ties_at.resize(t_max + 1);
    assigned_at.resize(t_max + 1);
    dist.assign(g.node_count(), -1);
    colors.assign(g.node_count(), Color::Uncolored);
  }

  // Returns false when the tie tree exceeds the path budget.
  bool run(const std::vector<Node>& seed_nodes,
           const std::vector<Color>& seed_colors, std::uint64_t path_budget,
           double& out) {
    budget = path_budget;
    blown = false;
    white_count = 0;
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(colors.begin(), colors.end(), Color::Uncolored);
    layers[0].clear();
    for (std::size_t i = 0; i < seed_nodes.size(); ++i) {
      dist[seed_nodes[i]] = 0;
      colors[seed_nodes[i]] = seed_colors[i];
      layers[0].push_back(seed_nodes[i]);
      if (seed_colors[i] == Color::White) ++white_count;
    }
    std::uint32_t depth = 0;
    for (std::uint32_t round = 1; round <= t_max; ++round) {
      auto& layer = layers[round];
      layer.clear();
      for (Node v : layers[round - 1]) {
        for (Node u : g.neighbors(v)) {
          if (dist[u] < 0) {
            dist[u] = static_cast<std::int32_t>(round);
            layer.push_back(u);
          }
        }
      }
      if (layer.empty()) break;
      depth = round;
    }
    out = expand(1, depth);
    return !blown;
  }

  double expand(std::uint32_t round, std::uint32_t depth) {
    if (blown) return 0.0;
    if (round > depth) return static_cast<double>(white_count);
    auto& ties = ties_at[round];
    auto& assigned = assigned_at[round];
    ties.clear();
    assigned.clear();
    for (Node v : layers[round]) {
      std::uint32_t black = 0, white = 0;
      for (Node u : g.neighbors(v)) {
        if (dist[u] == static_cast<std::int32_t>(round) - 1) {
          if (colors[u] == Color::Black) ++black;
          else ++white;
        }
      }
      if (black > white) {
        colors[v] = Color::Black;
        assigned.push_back(v);
      } else if (white > black) {
        colors[v] = Color::White;
        ++white_count;
        assigned.push_back(v);
      } else {
        ties.push_back(v);
      }
    }
    double total = 0.0;
    if (ties.empty()) {
      total = expand(round + 1, depth);
    } else if (ties.size() >= 40 || (budget >> ties.size()) == 0) {
      blown = true;
    } else {
      const std::uint64_t combos = 1ULL << ties.size();
      budget -= combos;
      for (std::uint64_t mask = 0; mask < combos && !blown; ++mask) {
        for (std::size_t i = 0; i < ties.size(); ++i) {
          if ((mask >> i) & 1ULL) {
            colors[ties[i]] = Color::Black;
          } else {
            colors[ties[i]] = Color::White;
            ++white_count;
          }
        }
        total += expand(round + 1, depth);
        for (std::size_t i = 0; i < ties.size(); ++i) {
          if (!((mask >> i) & 1ULL)) --white_count;
        }
      }
      total /= static_cast<double>(combos);
      for (Node v : ties) colors[v] = Color::Uncolored;
    }
    for (Node v : assigned) {
      if (colors[v] == Color::White) --white_count;
      colors[v] = Color::Uncolored;
    }
    return total;
  }
};

std::uint64_t placement_stream_seed(std::uint64_t base,
                                    const std::vector<Node>& blacks,
                                    const std::vector<Node>& whites) {
  std::uint64_t h = splitmix64(base ^ 0x9d3f8c4b21e0aa17ULL);
  for (Node v : blacks) h = splitmix64(h ^ (0x1000000001ULL + v));
  for (Node v : whites) h = splitmix64(h ^ (0x2000000001ULL + v));
  return h;
}

}  // namespace

double placement_expectation_exact(const Graph& g, const SeedColoring& seed,
                                   std::uint32_t t,
                                   std::uint64_t branch_budget) {
  ExactEnumerator enumerator(g, t);
  double value = 0.0;
  if (!enumerator.run(seed.nodes, seed.colors, branch_budget, value)) {
    throw Error(ErrorCode::InstanceTooLarge,
                "tie branching exceeds the exact-expectation budget");
  }
  return value;
}

double placement_expectation_mc(const Graph& g, const SeedColoring& seed,
                                std::uint32_t t, std::uint64_t trials,
                                std::uint64_t seed_base) {
  std::vector<Node> blacks, whites;
  for (std::size_t i = 0; i < seed.nodes.size(); ++i) {
    (seed.colors[i] == Color::Black ? blacks : whites).push_back(seed.nodes[i]);
  }
  Rng rng(placement_stream_seed(seed_base, blacks, whites));
  double sum = 0.0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    DiffusionTrace trace = run_diffusion(g, seed, t, TieRule::FairCoin, rng);
    sum += static_cast<double>(trace.white_cum(trace.rounds()));
  }
  return sum / static_cast<double>(trials);
}

std::uint64_t placement_whites_forced(const Graph& g, const SeedColoring& seed,
                                      std::uint32_t t, TieRule rule) {
  SimScratch scratch;
  return forced_run(g, seed.nodes, seed.colors, t, rule, scratch).whites;
}

namespace {

bool next_combination(std::vector<std::uint32_t>& comb, std::uint32_t n) {
  const std::uint32_t k = static_cast<std::uint32_t>(comb.size());
  if (k == 0) return false;
  std::int64_t i = static_cast<std::int64_t>(k) - 1;
  while (i >= 0 && comb[static_cast<std::size_t>(i)] ==
                       n - k + static_cast<std::uint32_t>(i)) {
    --i;
  }
  if (i < 0) return false;
  ++comb[static_cast<std::size_t>(i)];
  for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) {
    comb[j] = comb[j - 1] + 1;
  }
  return true;
}

struct BestPlacement {
  double value = std::numeric_limits<double>::infinity();
  std::vector<Node> blacks;
  std::vector<Node> whites;

  bool improves(double v, const std::vector<Node>& b,
                const std::vector<Node>& w) const {
    if (v < value) return true;
    if (v > value) return false;
    if (b != blacks) return b < blacks;
    return w < whites;
  }
};

}  // namespace

MIResult mi_bruteforce(const MIInstance& inst, const MIOptions& opts) {
  const Graph& g = inst.graph;
  const Node n = g.node_count();
  if (inst.b + inst.w > n) {
    throw Error(ErrorCode::InvalidParameters, "b + w exceeds node count");
  }
  if (opts.method == MIMethod::ExactExpectation && (n > 20 || inst.t > 3)) {
    throw Error(ErrorCode::InstanceTooLarge,
                "exact expectation is limited to n <= 20 and t <= 3");
  }

  std::atomic<double> shared_best{std::numeric_limits<double>::infinity()};
  std::atomic<std::uint64_t> pruned{0}, sampled{0}, total{0};

  auto relax_shared = [&](double v) {
    double cur = shared_best.load(std::memory_order_relaxed);
    while (v < cur &&
           !shared_best.compare_exchange_weak(cur, v,
                                              std::memory_order_relaxed)) {
    }
  };

  auto worker = [&](std::uint64_t begin, std::uint64_t stride,
                    BestPlacement& best) {
    SimScratch scratch;
    ExactEnumerator enumerator(g, inst.t);
    std::vector<std::uint32_t> black_comb(inst.b);
    for (std::uint32_t i = 0; i < inst.b; ++i) black_comb[i] = i;
    std::vector<Node> blacks(inst.b), whites(inst.w), rest;
    std::vector<Node> seed_nodes;
    std::vector<Color> colors;
    std::uint64_t black_index = 0;
    std::uint64_t local_total = 0, local_pruned = 0, local_sampled = 0;

    // Iterate black combinations (lexicographic); workers take a strided
    // subset. Empty b means a single empty combination.
    bool more = true;
    while (more) {
      if (black_index % stride == begin) {
        for (std::uint32_t i = 0; i < inst.b; ++i) blacks[i] = black_comb[i];
        rest.clear();
        {
          std::size_t bi = 0;
          for (Node v = 0; v < n; ++v) {
            if (bi < blacks.size() && blacks[bi] == v) {
              ++bi;
              continue;
            }
            rest.push_back(v);
          }
        }
        std::vector<std::uint32_t> white_comb(inst.w);
        for (std::uint32_t i = 0; i < inst.w; ++i) white_comb[i] = i;
        bool more_whites = true;
        while (more_whites) {
          for (std::uint32_t i = 0; i < inst.w; ++i) {
            whites[i] = rest[white_comb[i]];
          }
          ++local_total;

          seed_nodes.clear();
          colors.clear();
          for (Node v : blacks) {
            seed_nodes.push_back(v);
            colors.push_back(Color::Black);
          }
          for (Node v : whites) {
            seed_nodes.push_back(v);
            colors.push_back(Color::White);
          }

          double value;
          if (seed_nodes.empty()) {
            value = 0.0;
          } else {
            const auto lo_run = forced_run(g, seed_nodes, colors, inst.t,
                                           TieRule::AlwaysBlack, scratch);
            const double lo = static_cast<double>(lo_run.whites);
            // Two lower bounds on the expectation: ties-to-black pointwise
            // dominates, and the round-1 prefix in expectation (each round-1
            // tie is an independent fair coin, later rounds only add whites).
            const double round1_bound =
                inst.t >= 1 ? static_cast<double>(lo_run.round1_whites) +
                                  0.5 * static_cast<double>(lo_run.round1_ties)
                            : lo;
            const double incumbent =
                std::min(best.value, shared_best.load(std::memory_order_relaxed));
            if (lo > incumbent || round1_bound > incumbent) {
              ++local_pruned;
              more_whites = next_combination(
                  white_comb, static_cast<std::uint32_t>(rest.size()));
              continue;
            }
            const double hi = static_cast<double>(
                forced_run(g, seed_nodes, colors, inst.t, TieRule::AlwaysWhite,
                           scratch)
                    .whites);
            if (hi == lo) {
              value = lo;  // no tie coin can matter
            } else {
              ++local_sampled;
              if (opts.method == MIMethod::ExactExpectation) {
                if (!enumerator.run(seed_nodes, colors, opts.branch_budget,
                                    value)) {
                  throw Error(ErrorCode::InstanceTooLarge,
                              "tie branching exceeds the exact-expectation "
                              "budget");
                }
              } else if (!enumerator.run(seed_nodes, colors,
                                         opts.mc_exact_path_cap, value)) {
                SeedColoring seed;
                seed.nodes = seed_nodes;
                seed.colors = colors;
                value = placement_expectation_mc(g, seed, inst.t,
                                                 opts.mc_trials, opts.seed);
              }
            }
          }
          if (best.improves(value, blacks, whites)) {
            best.value = value;
            best.blacks = blacks;
            best.whites = whites;
            relax_shared(value);
          }
          more_whites = next_combination(
              white_comb, static_cast<std::uint32_t>(rest.size()));
        }
      }
      ++black_index;
      more = next_combination(black_comb, n);
      if (inst.b == 0) more = false;
    }
    total += local_total;
    pruned += local_pruned;
    sampled += local_sampled;
  };

  const std::uint32_t jobs = std::max<std::uint32_t>(opts.jobs, 1);
  std::vector<BestPlacement> bests(jobs);
  if (jobs == 1) {
    worker(0, 1, bests[0]);
  } else {
    std::vector<std::exception_ptr> failures(jobs);
    auto guarded = [&](std::uint64_t begin, std::uint64_t stride,
                       BestPlacement& best, std::exception_ptr& failure) {
      try {
        worker(begin, stride, best);
      } catch (...) {
        failure = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    for (std::uint32_t wkr = 0; wkr < jobs; ++wkr) {
      threads.emplace_back(guarded, wkr, jobs, std::ref(bests[wkr]),
                           std::ref(failures[wkr]));
    }
    for (auto& th : threads) th.join();
    for (auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  BestPlacement final_best;
  for (const auto& candidate : bests) {
    if (std::isinf(candidate.value)) continue;  // worker saw no placements
    if (final_best.improves(candidate.value, candidate.blacks,
                            candidate.whites)) {
      final_best = candidate;
    }
  }
  if (std::isinf(final_best.value)) {
    throw Error(ErrorCode::InvalidParameters, "no placement exists");
  }

  MIResult result;
  result.optimum = final_best.value;
  std::vector<Node> nodes = final_best.blacks;
  std::vector<Color> colors(final_best.blacks.size(), Color::Black);
  nodes.insert(nodes.end(), final_best.whites.begin(), final_best.whites.end());
  colors.insert(colors.end(), final_best.whites.size(), Color::White);
  result.placement = SeedColoring::make(std::move(nodes), std::move(colors), n);
  result.placements_total = total.load();
  result.placements_pruned = pruned.load();
  result.placements_sampled = sampled.load();
  return result;
}

bool thop_domset_check(const Graph& g, const std::vector<Node>& s,
                       std::uint32_t t) {
  if (s.empty()) {
    throw Error(ErrorCode::EmptySet, "t-hop dominating set check needs nodes");
  }
  auto dist = distances_from(g, s);
  for (std::int32_t d : dist) {
    if (d < 0 || static_cast<std::uint32_t>(d) > t) return false;
  }
  return true;
}

}  // namespace opforge
