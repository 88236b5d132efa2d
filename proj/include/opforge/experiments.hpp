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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opforge/attackers.hpp"
#include "opforge/diffusion.hpp"
#include "opforge/generators.hpp"
#include "opforge/graph.hpp"

namespace opforge {

// Exactly one member is set.
struct GraphSource {
  std::optional<std::string> file;
  std::optional<FamilySpec> family;
  std::optional<CounterexampleSpec> counterexample;
};

struct ExperimentConfig {
  GraphSource graph;
  AttackerSpec attacker;
  RoundLimit rounds;  // nullopt = until stable
  TieRule tie = TieRule::FairCoin;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  WinMode win_mode = WinMode::ColoredMajority;
  double ci_level = 0.99;
  std::uint32_t jobs = 1;
};

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  double win_rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double ci_level = 0.99;
  std::map<std::uint32_t, std::uint64_t> stabilization_histogram;
  std::uint64_t unstabilized = 0;  // trials cut off by the round limit
  double mean_b_hat = 0.0;
  double mean_w_hat = 0.0;
};

struct TrialRecord {
  std::uint64_t trial = 0;
  bool win = false;
  std::uint64_t b_hat = 0;
  std::uint64_t w_hat = 0;
  std::optional<std::uint32_t> stabilization;
};

// RNG stream layout (provenance contract): trial i uses
// Rng::stream(master_seed, i); random graph generation uses
// Rng::stream(master_seed, 2^63).
inline constexpr std::uint64_t kGraphStreamIndex = 1ULL << 63;

struct LoadedGraph {
  Graph graph;
  std::vector<Node> seed_hint;           // from counterexample sidecars
  std::optional<SeedColoring> prescribed;
};

LoadedGraph load_graph_source(const GraphSource& source,
                              std::uint64_t master_seed);

// Runs cfg.trials independent attacker+diffusion runs. Trial i is seeded by a
// deterministic function of (master_seed, i), so the result is a pure function
// of the config regardless of jobs. Wins are evaluated at the last recorded
// round (constant past stabilization). If `records` is non-null it receives
// one entry per trial, ordered by trial index.
TrialStats run_trials(const ExperimentConfig& cfg,
                      std::vector<TrialRecord>* records = nullptr);

struct ThresholdInputs {
  double n = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double mu = 0.0;
  double t = 1.0;
  double delta = 1.0;    // minimum degree
  double max_degree = 2.0;
  double d = 2.0;        // tree arity
  double c = 1.0;        // free constants; no particular value is proven
  double c_prime = 1.0;
  double c_double_prime = 1.0;
};

struct ThresholdReport {
  ThresholdInputs inputs;
  // Max-degree ceilings below which the respective attacker fails w.p. 1-mu.
  double moderate_max_degree_bound = 0.0;  // (C n / log(1/mu))^(1/(2t))
  double moderate_one_round_max_degree_bound = 0.0;  // C'' n / log^2(1/mu)
  double weak_max_degree_bound = 0.0;  // C n / ((log n)^{C'} log(4/mu))
  // Degree tiers for the weak/moderate analyses.
  double d_star_1 = 0.0;  // half the nodes this high-degree resist weak attacks:
                          //   (6/(alpha eps^2)) log(12/(alpha eps mu))
  double d_star_2 = 0.0;  // non-seeds above this go white in round 1 whp:
                          //   8 log n / (alpha eps^2)
  double d_star_3 = 0.0;  // one-round high-degree cut: 4 log(6/mu) / eps^2
  // Round tiers for random (per-node w.p. alpha) seedings.
  double t_star_1 = 0.0;  // few nodes color after this round:
                          //   (2/alpha) log(4/(alpha eps))
  double t_star_2 = 0.0;  // stabilization upper bound: (6/(alpha delta)) log n + 1
  double t_star_3 = 0.0;  // cycle-power lower bound: (1/(16 alpha delta)) log2 n - 1
  double t_star_4 = 0.0;  // general lower bound: log_Delta((1/(16 alpha)) log2 n)
  double t_star_5 = 0.0;  // tree upper bound shows t_star_4 tight:
                          //   log_d((2/alpha) log n) + 1
};

// Literal evaluation of every closed-form threshold. Logs are natural except
// where the formulas say log2. Requires mu > 1/sqrt(n).
ThresholdReport compute_thresholds(const ThresholdInputs& in);

struct StabilizationReport {
  std::uint64_t trials = 0;
  std::uint64_t empty_seed_trials = 0;
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::uint32_t max_observed = 0;
  double quantile50 = 0.0;
  double quantile90 = 0.0;
  double quantile99 = 0.0;
  double t_star_2 = 0.0;
  double t_star_4 = 0.0;
  double fraction_within_t_star_2 = 0.0;
};

// Seeds each node independently w.p. alpha per trial and measures the number
// of rounds until every node is colored (= max BFS distance from the seed
// set). Requires a connected graph.
StabilizationReport stabilization_bound_check(const Graph& g, double alpha,
                                              std::uint64_t trials,
                                              std::uint64_t master_seed,
                                              std::uint32_t jobs = 1);

}  // namespace opforge
