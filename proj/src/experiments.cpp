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

#include "opforge/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "opforge/io.hpp"
#include "opforge/stats.hpp"

namespace opforge {

LoadedGraph load_graph_source(const GraphSource& source,
                              std::uint64_t master_seed) {
  int set = (source.file ? 1 : 0) + (source.family ? 1 : 0) +
            (source.counterexample ? 1 : 0);
  if (set != 1) {
    throw Error(ErrorCode::InvalidParameters,
                "graph source must set exactly one of file/family/counterexample");
  }
  LoadedGraph out;
  if (source.file) {
    out.graph = read_edge_list_file(*source.file);
  } else if (source.family) {
    Rng rng = Rng::stream(master_seed, kGraphStreamIndex);
    out.graph = generate(*source.family, rng);
  } else {
    Rng rng = Rng::stream(master_seed, kGraphStreamIndex);
    auto artifact = generate_counterexample(*source.counterexample, rng);
    out.graph = std::move(artifact.graph);
    out.seed_hint = std::move(artifact.seed_hint);
    out.prescribed = std::move(artifact.prescribed);
  }
  return out;
}

namespace {

struct Accumulator {
  std::uint64_t wins = 0;
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::uint64_t unstabilized = 0;
  double sum_b = 0.0;
  double sum_w = 0.0;

  void merge(const Accumulator& other) {
    wins += other.wins;
    unstabilized += other.unstabilized;
    sum_b += other.sum_b;
    sum_w += other.sum_w;
    for (const auto& [round, count] : other.histogram) {
      histogram[round] += count;
    }
  }
};

}  // namespace

TrialStats run_trials(const ExperimentConfig& cfg,
                      std::vector<TrialRecord>* records) {
  if (cfg.trials < 1) {
    throw Error(ErrorCode::InvalidParameters, "trials must be >= 1");
  }
  LoadedGraph loaded = load_graph_source(cfg.graph, cfg.master_seed);
  const Graph& g = loaded.graph;

  AttackerSpec attacker = cfg.attacker;
  if (attacker.strategy == SeedStrategy::Explicit && attacker.seed_hint.empty()) {
    attacker.seed_hint = loaded.seed_hint;
    if (attacker.kind == AttackerKind::Strong && loaded.prescribed) {
      attacker.seed_hint = loaded.prescribed->nodes;
      attacker.seed_hint_colors = loaded.prescribed->colors;
    }
  }

  if (records) records->assign(cfg.trials, {});

  auto run_range = [&](std::uint64_t begin, std::uint64_t stride,
                       Accumulator& acc) {
    for (std::uint64_t i = begin; i < cfg.trials; i += stride) {
      Rng rng = Rng::stream(cfg.master_seed, i);
      SeedColoring seed = attacker_seed(g, attacker, rng);
      TrialRecord record;
      record.trial = i;
      if (seed.nodes.empty()) {
        // Weak attacker with no luck: nothing is ever colored. Under the
        // colored-majority convention 0 >= 0 counts as a win.
        record.win = cfg.win_mode == WinMode::ColoredMajority;
        record.stabilization = 0;
        acc.histogram[0] += 1;
      } else {
        DiffusionTrace trace =
            run_diffusion(g, seed, cfg.rounds, cfg.tie, rng);
        const std::uint32_t final_round = trace.rounds();
        record.win = attacker_wins(trace, final_round, cfg.win_mode);
        record.b_hat = trace.black_cum(final_round);
        record.w_hat = trace.white_cum(final_round);
        record.stabilization = trace.stabilization();
        if (trace.stabilization()) {
          acc.histogram[*trace.stabilization()] += 1;
        } else {
          acc.unstabilized += 1;
        }
      }
      if (record.win) ++acc.wins;
      acc.sum_b += static_cast<double>(record.b_hat);
      acc.sum_w += static_cast<double>(record.w_hat);
      if (records) (*records)[i] = record;
    }
  };

  const std::uint32_t jobs = std::max<std::uint32_t>(cfg.jobs, 1);
  Accumulator total;
  if (jobs == 1) {
    run_range(0, 1, total);
  } else {
    std::vector<Accumulator> parts(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::uint32_t w = 0; w < jobs; ++w) {
      workers.emplace_back(run_range, w, jobs, std::ref(parts[w]));
    }
    for (auto& t : workers) t.join();
    for (const auto& part : parts) total.merge(part);
  }

  TrialStats stats;
  stats.trials = cfg.trials;
  stats.wins = total.wins;
  stats.win_rate =
      static_cast<double>(total.wins) / static_cast<double>(cfg.trials);
  Interval ci = clopper_pearson(total.wins, cfg.trials, cfg.ci_level);
  stats.ci_low = ci.low;
  stats.ci_high = ci.high;
  stats.ci_level = cfg.ci_level;
  stats.stabilization_histogram = std::move(total.histogram);
  stats.unstabilized = total.unstabilized;
  stats.mean_b_hat = total.sum_b / static_cast<double>(cfg.trials);
  stats.mean_w_hat = total.sum_w / static_cast<double>(cfg.trials);
  return stats;
}

ThresholdReport compute_thresholds(const ThresholdInputs& in) {
  // alpha = 1/2 is allowed here: these are formula evaluations, not attacker
  // constructions, and the boundary value is a useful sanity input.
  const bool valid =
      in.n >= 2.0 && in.alpha > 0.0 && in.alpha <= 0.5 && in.epsilon > 0.0 &&
      in.epsilon < 0.5 && in.mu > 1.0 / std::sqrt(in.n) && in.mu < 1.0 &&
      in.t >= 1.0 && in.delta >= 1.0 && in.max_degree >= 2.0 && in.d >= 2.0 &&
      in.c > 0.0 && in.c_prime > 0.0 && in.c_double_prime > 0.0;
  if (!valid) {
    throw Error(ErrorCode::InvalidParameters,
                "threshold inputs out of range (note: mu must exceed 1/sqrt(n))");
  }
  const double log_n = std::log(in.n);
  const double log2_n = std::log2(in.n);
  const double log_inv_mu = std::log(1.0 / in.mu);

  ThresholdReport report;
  report.inputs = in;
  report.moderate_max_degree_bound =
      std::pow(in.c * in.n / log_inv_mu, 1.0 / (2.0 * in.t));
  report.moderate_one_round_max_degree_bound =
      in.c_double_prime * in.n / (log_inv_mu * log_inv_mu);
  report.weak_max_degree_bound =
      in.c * in.n / (std::pow(log_n, in.c_prime) * std::log(4.0 / in.mu));
  report.d_star_1 = (6.0 / (in.alpha * in.epsilon * in.epsilon)) *
                    std::log(12.0 / (in.alpha * in.epsilon * in.mu));
  report.d_star_2 = 8.0 * log_n / (in.alpha * in.epsilon * in.epsilon);
  report.d_star_3 = 4.0 * std::log(6.0 / in.mu) / (in.epsilon * in.epsilon);
  report.t_star_1 = (2.0 / in.alpha) * std::log(4.0 / (in.alpha * in.epsilon));
  report.t_star_2 = (6.0 / (in.alpha * in.delta)) * log_n + 1.0;
  report.t_star_3 = (1.0 / (16.0 * in.alpha * in.delta)) * log2_n - 1.0;
  report.t_star_4 =
      std::log((1.0 / (16.0 * in.alpha)) * log2_n) / std::log(in.max_degree);
  report.t_star_5 =
      std::log((2.0 / in.alpha) * log_n) / std::log(in.d) + 1.0;
  return report;
}

StabilizationReport stabilization_bound_check(const Graph& g, double alpha,
                                              std::uint64_t trials,
                                              std::uint64_t master_seed,
                                              std::uint32_t jobs) {
  if (alpha <= 0.0 || alpha > 1.0 || trials < 1) {
    throw Error(ErrorCode::InvalidParameters,
                "stabilization check needs alpha in (0,1] and trials >= 1");
  }
  {
    auto dist = distances_from(g, {0});
    if (std::any_of(dist.begin(), dist.end(), [](auto d) { return d < 0; })) {
      throw Error(ErrorCode::Disconnected, "graph is not connected");
    }
  }

  struct Part {
    std::map<std::uint32_t, std::uint64_t> histogram;
    std::uint64_t empty_trials = 0;
  };
  auto run_range = [&](std::uint64_t begin, std::uint64_t stride, Part& part) {
    std::vector<Node> seeds;
    for (std::uint64_t i = begin; i < trials; i += stride) {
      Rng rng = Rng::stream(master_seed, i);
      seeds.clear();
      for (Node v = 0; v < g.node_count(); ++v) {
        if (rng.bernoulli(alpha)) seeds.push_back(v);
      }
      if (seeds.empty()) {
        ++part.empty_trials;
        continue;
      }
      // Stabilization time equals the eccentricity of the seed set: the set
      // colored in round t is exactly N_t(R_0).
      auto dist = distances_from(g, seeds);
      std::int32_t max_dist = 0;
      for (std::int32_t d : dist) max_dist = std::max(max_dist, d);
      part.histogram[static_cast<std::uint32_t>(max_dist)] += 1;
    }
  };

  const std::uint32_t worker_count = std::max<std::uint32_t>(jobs, 1);
  std::vector<Part> parts(worker_count);
  if (worker_count == 1) {
    run_range(0, 1, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (std::uint32_t w = 0; w < worker_count; ++w) {
      workers.emplace_back(run_range, w, worker_count, std::ref(parts[w]));
    }
    for (auto& t : workers) t.join();
  }

  StabilizationReport report;
  report.trials = trials;
  for (const auto& part : parts) {
    report.empty_seed_trials += part.empty_trials;
    for (const auto& [round, count] : part.histogram) {
      report.histogram[round] += count;
    }
  }

  std::uint64_t counted = trials - report.empty_seed_trials;
  auto quantile = [&](double q) -> double {
    if (counted == 0) return 0.0;
    std::uint64_t target =
        static_cast<std::uint64_t>(std::ceil(q * static_cast<double>(counted)));
    target = std::max<std::uint64_t>(target, 1);
    std::uint64_t seen = 0;
    for (const auto& [round, count] : report.histogram) {
      seen += count;
      if (seen >= target) return round;
    }
    return report.histogram.empty() ? 0.0 : report.histogram.rbegin()->first;
  };
  report.quantile50 = quantile(0.50);
  report.quantile90 = quantile(0.90);
  report.quantile99 = quantile(0.99);
  if (!report.histogram.empty()) {
    report.max_observed = report.histogram.rbegin()->first;
  }

  // t*_2 and t*_4 evaluated inline so the seeding probability is not tied to
  // the attacker-parameter validation (alpha here may be any value in (0,1]).
  const double n = static_cast<double>(g.node_count());
  const double delta = std::max<double>(g.min_degree(), 1.0);
  const double max_degree = std::max<double>(g.max_degree(), 2.0);
  report.t_star_2 = (6.0 / (alpha * delta)) * std::log(n) + 1.0;
  report.t_star_4 = std::log((1.0 / (16.0 * alpha)) * std::log2(n)) /
                    std::log(max_degree);

  std::uint64_t within = 0;
  for (const auto& [round, count] : report.histogram) {
    if (static_cast<double>(round) <= report.t_star_2) within += count;
  }
  report.fraction_within_t_star_2 =
      counted == 0 ? 0.0
                   : static_cast<double>(within) / static_cast<double>(counted);
  return report;
}

}  // namespace opforge
