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

#include "opforge/json_io.hpp"

#include <string>

namespace opforge {

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::Star: return "star";
    case Family::CyclePower: return "cycle_power";
    case Family::DaryTree: return "dary_tree";
    case Family::CliqueUnion: return "clique_union";
    case Family::RandomRegular: return "random_regular";
    case Family::ErdosRenyi: return "erdos_renyi";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "star") return Family::Star;
  if (name == "cycle_power") return Family::CyclePower;
  if (name == "dary_tree") return Family::DaryTree;
  if (name == "clique_union") return Family::CliqueUnion;
  if (name == "random_regular") return Family::RandomRegular;
  if (name == "erdos_renyi") return Family::ErdosRenyi;
  throw Error(ErrorCode::InvalidParameters, "unknown family '" + name + "'");
}

const char* counterexample_name(Counterexample kind) {
  switch (kind) {
    case Counterexample::RegularNonExpander: return "regular_non_expander";
    case Counterexample::Prop1CycleTrees: return "prop1_cycle_trees";
    case Counterexample::CoreDominated: return "core_dominated";
    case Counterexample::StarForest: return "star_forest";
  }
  return "?";
}

Counterexample counterexample_from_string(const std::string& name) {
  if (name == "regular_non_expander") return Counterexample::RegularNonExpander;
  if (name == "prop1_cycle_trees") return Counterexample::Prop1CycleTrees;
  if (name == "core_dominated") return Counterexample::CoreDominated;
  if (name == "star_forest") return Counterexample::StarForest;
  throw Error(ErrorCode::InvalidParameters,
              "unknown counterexample '" + name + "'");
}

const char* attacker_kind_name(AttackerKind kind) {
  switch (kind) {
    case AttackerKind::Strong: return "strong";
    case AttackerKind::Moderate: return "moderate";
    case AttackerKind::Weak: return "weak";
  }
  return "?";
}

AttackerKind attacker_kind_from_string(const std::string& name) {
  if (name == "strong") return AttackerKind::Strong;
  if (name == "moderate") return AttackerKind::Moderate;
  if (name == "weak") return AttackerKind::Weak;
  throw Error(ErrorCode::InvalidParameters,
              "unknown attacker kind '" + name + "'");
}

const char* strategy_name(SeedStrategy strategy) {
  switch (strategy) {
    case SeedStrategy::Explicit: return "explicit";
    case SeedStrategy::DegreeGreedyBlack: return "degree_greedy_black";
    case SeedStrategy::ComponentSplit: return "component_split";
    case SeedStrategy::DegreeGreedy: return "degree_greedy";
    case SeedStrategy::RandomBaseline: return "random";
  }
  return "?";
}

SeedStrategy strategy_from_string(const std::string& name) {
  if (name == "explicit") return SeedStrategy::Explicit;
  if (name == "degree_greedy_black") return SeedStrategy::DegreeGreedyBlack;
  if (name == "component_split") return SeedStrategy::ComponentSplit;
  if (name == "degree_greedy") return SeedStrategy::DegreeGreedy;
  if (name == "random") return SeedStrategy::RandomBaseline;
  throw Error(ErrorCode::InvalidParameters, "unknown strategy '" + name + "'");
}

}  // namespace

const char* tie_rule_name(TieRule rule) {
  switch (rule) {
    case TieRule::FairCoin: return "fair";
    case TieRule::AlwaysBlack: return "black";
    case TieRule::AlwaysWhite: return "white";
  }
  return "?";
}

TieRule tie_rule_from_string(const std::string& name) {
  if (name == "fair") return TieRule::FairCoin;
  if (name == "black") return TieRule::AlwaysBlack;
  if (name == "white") return TieRule::AlwaysWhite;
  throw Error(ErrorCode::InvalidParameters, "unknown tie rule '" + name + "'");
}

const char* win_mode_name(WinMode mode) {
  switch (mode) {
    case WinMode::ColoredMajority: return "colored_majority";
    case WinMode::PopulationMajority: return "population_majority";
  }
  return "?";
}

WinMode win_mode_from_string(const std::string& name) {
  if (name == "colored_majority") return WinMode::ColoredMajority;
  if (name == "population_majority") return WinMode::PopulationMajority;
  throw Error(ErrorCode::InvalidParameters, "unknown win mode '" + name + "'");
}

Json to_json(const FamilySpec& spec) {
  Json j;
  j["family"] = family_name(spec.family);
  switch (spec.family) {
    case Family::Star:
      j["n"] = spec.n;
      break;
    case Family::CyclePower:
      j["n"] = spec.n;
      j["delta"] = spec.delta;
      break;
    case Family::DaryTree:
      j["depth"] = spec.depth;
      j["d"] = spec.d;
      break;
    case Family::CliqueUnion:
      j["sizes"] = spec.clique_sizes;
      break;
    case Family::RandomRegular:
      j["n"] = spec.n;
      j["d"] = spec.d;
      j["retry_cap"] = spec.retry_cap;
      break;
    case Family::ErdosRenyi:
      j["n"] = spec.n;
      j["p"] = spec.p;
      break;
  }
  return j;
}

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec spec;
  spec.family = family_from_string(j.at("family").get<std::string>());
  if (j.contains("n")) spec.n = j.at("n").get<Node>();
  if (j.contains("delta")) spec.delta = j.at("delta").get<std::uint32_t>();
  if (j.contains("depth")) spec.depth = j.at("depth").get<std::uint32_t>();
  if (j.contains("d")) spec.d = j.at("d").get<std::uint32_t>();
  if (j.contains("sizes")) {
    spec.clique_sizes = j.at("sizes").get<std::vector<Node>>();
  }
  if (j.contains("p")) spec.p = j.at("p").get<double>();
  if (j.contains("retry_cap")) {
    spec.retry_cap = j.at("retry_cap").get<std::uint32_t>();
  }
  return spec;
}

Json to_json(const CounterexampleSpec& spec) {
  Json j;
  j["kind"] = counterexample_name(spec.kind);
  j["n"] = spec.n;
  switch (spec.kind) {
    case Counterexample::RegularNonExpander:
      j["alpha"] = spec.alpha;
      j["epsilon"] = spec.epsilon;
      j["d"] = spec.d;
      break;
    case Counterexample::Prop1CycleTrees:
      j["alpha"] = spec.alpha;
      j["epsilon"] = spec.epsilon;
      j["mu"] = spec.mu;
      j["t"] = spec.t;
      break;
    case Counterexample::CoreDominated:
    case Counterexample::StarForest:
      j["s"] = spec.s;
      break;
  }
  return j;
}

CounterexampleSpec counterexample_spec_from_json(const Json& j) {
  CounterexampleSpec spec;
  spec.kind = counterexample_from_string(j.at("kind").get<std::string>());
  spec.n = j.at("n").get<Node>();
  if (j.contains("alpha")) spec.alpha = j.at("alpha").get<double>();
  if (j.contains("epsilon")) spec.epsilon = j.at("epsilon").get<double>();
  if (j.contains("mu")) spec.mu = j.at("mu").get<double>();
  if (j.contains("t")) spec.t = j.at("t").get<std::uint32_t>();
  if (j.contains("d")) spec.d = j.at("d").get<std::uint32_t>();
  if (j.contains("s")) spec.s = j.at("s").get<std::uint32_t>();
  return spec;
}

Json to_json(const AttackerSpec& spec) {
  Json j;
  j["kind"] = attacker_kind_name(spec.kind);
  j["alpha"] = spec.alpha;
  j["epsilon"] = spec.epsilon;
  if (spec.kind != AttackerKind::Weak) {
    j["strategy"] = strategy_name(spec.strategy);
  }
  if (!spec.seed_hint.empty()) j["seed_hint"] = spec.seed_hint;
  if (!spec.seed_hint_colors.empty()) {
    std::string encoded;
    for (Color c : spec.seed_hint_colors) {
      encoded.push_back(c == Color::Black ? 'B' : 'W');
    }
    j["seed_hint_colors"] = encoded;
  }
  return j;
}

AttackerSpec attacker_spec_from_json(const Json& j) {
  AttackerSpec spec;
  spec.kind = attacker_kind_from_string(j.at("kind").get<std::string>());
  spec.alpha = j.at("alpha").get<double>();
  spec.epsilon = j.at("epsilon").get<double>();
  if (j.contains("strategy")) {
    spec.strategy = strategy_from_string(j.at("strategy").get<std::string>());
  }
  if (j.contains("seed_hint")) {
    spec.seed_hint = j.at("seed_hint").get<std::vector<Node>>();
  }
  if (j.contains("seed_hint_colors")) {
    for (char c : j.at("seed_hint_colors").get<std::string>()) {
      spec.seed_hint_colors.push_back(c == 'B' ? Color::Black : Color::White);
    }
  }
  return spec;
}

Json to_json(const ExperimentConfig& cfg) {
  Json graph;
  if (cfg.graph.file) {
    graph["file"] = *cfg.graph.file;
  } else if (cfg.graph.family) {
    graph["family"] = to_json(*cfg.graph.family);
  } else if (cfg.graph.counterexample) {
    graph["counterexample"] = to_json(*cfg.graph.counterexample);
  }
  Json j;
  j["graph"] = graph;
  j["attacker"] = to_json(cfg.attacker);
  if (cfg.rounds) {
    j["rounds"] = *cfg.rounds;
  } else {
    j["rounds"] = "stable";
  }
  j["tie"] = tie_rule_name(cfg.tie);
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  j["win_mode"] = win_mode_name(cfg.win_mode);
  j["ci_level"] = cfg.ci_level;
  return j;
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  ExperimentConfig cfg;
  const Json& graph = j.at("graph");
  if (graph.contains("file")) {
    cfg.graph.file = graph.at("file").get<std::string>();
  } else if (graph.contains("family")) {
    cfg.graph.family = family_spec_from_json(graph.at("family"));
  } else if (graph.contains("counterexample")) {
    cfg.graph.counterexample =
        counterexample_spec_from_json(graph.at("counterexample"));
  } else {
    throw Error(ErrorCode::InvalidParameters, "config lacks a graph source");
  }
  cfg.attacker = attacker_spec_from_json(j.at("attacker"));
  const Json& rounds = j.at("rounds");
  if (rounds.is_string()) {
    if (rounds.get<std::string>() != "stable") {
      throw Error(ErrorCode::InvalidParameters,
                  "rounds must be a number or \"stable\"");
    }
    cfg.rounds = std::nullopt;
  } else {
    cfg.rounds = rounds.get<std::uint32_t>();
  }
  if (j.contains("tie")) {
    cfg.tie = tie_rule_from_string(j.at("tie").get<std::string>());
  }
  cfg.trials = j.at("trials").get<std::uint64_t>();
  cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
  if (j.contains("win_mode")) {
    cfg.win_mode = win_mode_from_string(j.at("win_mode").get<std::string>());
  }
  if (j.contains("ci_level")) cfg.ci_level = j.at("ci_level").get<double>();
  return cfg;
}

Json to_json(const TrialStats& stats) {
  Json histogram = Json::object();
  for (const auto& [round, count] : stats.stabilization_histogram) {
    histogram[std::to_string(round)] = count;
  }
  Json j;
  j["trials"] = stats.trials;
  j["wins"] = stats.wins;
  j["win_rate"] = stats.win_rate;
  j["ci_low"] = stats.ci_low;
  j["ci_high"] = stats.ci_high;
  j["ci_level"] = stats.ci_level;
  j["mean_b_hat"] = stats.mean_b_hat;
  j["mean_w_hat"] = stats.mean_w_hat;
  j["stabilization_histogram"] = histogram;
  j["unstabilized"] = stats.unstabilized;
  return j;
}

Json to_json(const ThresholdReport& report) {
  Json inputs;
  inputs["n"] = report.inputs.n;
  inputs["alpha"] = report.inputs.alpha;
  inputs["epsilon"] = report.inputs.epsilon;
  inputs["mu"] = report.inputs.mu;
  inputs["t"] = report.inputs.t;
  inputs["delta"] = report.inputs.delta;
  inputs["Delta"] = report.inputs.max_degree;
  inputs["d"] = report.inputs.d;
  inputs["C"] = report.inputs.c;
  inputs["C_prime"] = report.inputs.c_prime;
  inputs["C_double_prime"] = report.inputs.c_double_prime;
  Json j;
  j["inputs"] = inputs;
  j["constants_note"] =
      "C, C', C'' are placeholders; no particular value is proven";
  j["moderate_max_degree_bound"] = report.moderate_max_degree_bound;
  j["moderate_one_round_max_degree_bound"] = report.moderate_one_round_max_degree_bound;
  j["weak_max_degree_bound"] = report.weak_max_degree_bound;
  j["d_star_1"] = report.d_star_1;
  j["d_star_2"] = report.d_star_2;
  j["d_star_3"] = report.d_star_3;
  j["t_star_1"] = report.t_star_1;
  j["t_star_2"] = report.t_star_2;
  j["t_star_3"] = report.t_star_3;
  j["t_star_4"] = report.t_star_4;
  j["t_star_5"] = report.t_star_5;
  return j;
}

Json to_json(const SpectralReport& report) {
  Json j;
  j["sigma"] = report.sigma;
  j["gamma"] = report.gamma;
  j["method"] = report.method == SigmaMethod::DenseEigensolve
                    ? "dense_eigensolve"
                    : "power_iteration_deflation";
  j["residual"] = report.residual;
  j["iterations"] = report.iterations;
  if (report.lambda2) j["lambda2"] = *report.lambda2;
  if (report.lambda_min) j["lambda_min"] = *report.lambda_min;
  return j;
}

Json to_json(const ResilienceCertificate& cert) {
  Json j;
  j["verdict"] =
      cert.verdict == CertVerdict::Resilient ? "resilient" : "unknown";
  switch (cert.condition_checked) {
    case CertCondition::RegularThm2:
      j["condition_checked"] = "regular";
      break;
    case CertCondition::IrregularVariant:
      j["condition_checked"] = "irregular_variant";
      break;
    case CertCondition::None:
      j["condition_checked"] = "none";
      break;
  }
  j["threshold"] = cert.threshold;
  j["sigma_used"] = cert.sigma_used;
  j["alpha"] = cert.alpha;
  j["epsilon"] = cert.epsilon;
  return j;
}

Json to_json(const StabilizationReport& report) {
  Json histogram = Json::object();
  for (const auto& [round, count] : report.histogram) {
    histogram[std::to_string(round)] = count;
  }
  Json j;
  j["trials"] = report.trials;
  j["empty_seed_trials"] = report.empty_seed_trials;
  j["max_observed"] = report.max_observed;
  j["quantile50"] = report.quantile50;
  j["quantile90"] = report.quantile90;
  j["quantile99"] = report.quantile99;
  j["t_star_2"] = report.t_star_2;
  j["t_star_4"] = report.t_star_4;
  j["fraction_within_t_star_2"] = report.fraction_within_t_star_2;
  j["histogram"] = histogram;
  return j;
}

Json to_json(const SeedColoring& seed) {
  Json blacks = Json::array();
  Json whites = Json::array();
  for (std::size_t i = 0; i < seed.nodes.size(); ++i) {
    if (seed.colors[i] == Color::Black) {
      blacks.push_back(seed.nodes[i]);
    } else {
      whites.push_back(seed.nodes[i]);
    }
  }
  Json j;
  j["black"] = blacks;
  j["white"] = whites;
  return j;
}

Json to_json(const MIResult& result) {
  Json j;
  j["optimum"] = result.optimum;
  j["placement"] = to_json(result.placement);
  j["placements_total"] = result.placements_total;
  j["placements_pruned"] = result.placements_pruned;
  j["placements_sampled"] = result.placements_sampled;
  return j;
}

}  // namespace opforge
