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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "opforge/io.hpp"
#include "opforge/json_io.hpp"
#include "opforge/stats.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using opforge::Json;

Json provenance(const std::string& subcommand, Json config) {
  Json j;
  j["tool"] = "opinion-forge";
  j["version"] = kVersion;
  j["subcommand"] = subcommand;
  j["config"] = std::move(config);
  return j;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw opforge::Error(opforge::ErrorCode::GraphLoadError,
                         "cannot write '" + path + "'");
  }
  out << content;
}

struct GenerateArgs {
  std::string family;
  std::string counterexample;
  std::uint64_t n = 0;
  std::uint32_t delta = 0;
  std::uint32_t depth = 0;
  std::uint32_t d = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  double p = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double mu = 0.0;
  std::vector<opforge::Node> sizes;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string sidecar;
};

int run_generate(const GenerateArgs& args) {
  const std::uint64_t seed = args.seed.value_or(fresh_seed());
  opforge::Rng rng =
      opforge::Rng::stream(seed, opforge::kGraphStreamIndex);

  Json config;
  opforge::Graph graph;
  Json sidecar;
  if (!args.family.empty()) {
    opforge::FamilySpec spec;
    spec.family = opforge::family_spec_from_json(Json{{"family", args.family}}).family;
    spec.n = static_cast<opforge::Node>(args.n);
    spec.delta = args.delta;
    spec.depth = args.depth;
    spec.d = args.d;
    spec.p = args.p;
    spec.clique_sizes = args.sizes;
    graph = opforge::generate(spec, rng);
    config["family"] = opforge::to_json(spec);
  } else {
    opforge::CounterexampleSpec spec;
    spec.kind = opforge::counterexample_spec_from_json(
                    Json{{"kind", args.counterexample}, {"n", 0}})
                    .kind;
    spec.n = static_cast<opforge::Node>(args.n);
    spec.alpha = args.alpha;
    spec.epsilon = args.epsilon;
    spec.mu = args.mu;
    spec.t = args.t;
    spec.d = args.d;
    spec.s = args.s;
    auto artifact = opforge::generate_counterexample(spec, rng);
    graph = std::move(artifact.graph);
    config["counterexample"] = opforge::to_json(spec);

    sidecar["seed_hint"] = artifact.seed_hint;
    if (artifact.prescribed) {
      sidecar["prescribed_coloring"] = opforge::to_json(*artifact.prescribed);
    }
    Json derived;
    for (const auto& [key, value] : artifact.derived) derived[key] = value;
    sidecar["derived"] = derived;
    sidecar["roles"] = artifact.roles;
  }
  config["master_seed"] = seed;

  opforge::write_edge_list_file(graph, args.out,
                                provenance("generate", config).dump());

  Json result = provenance("generate", config);
  result["n"] = graph.node_count();
  result["m"] = graph.edge_count();
  result["max_degree"] = graph.max_degree();
  result["min_degree"] = graph.min_degree();

  if (!args.sidecar.empty()) {
    Json side = provenance("generate", config);
    for (auto& [key, value] : sidecar.items()) side[key] = value;
    write_text_file(args.sidecar, side.dump(2) + "\n");
  }
  std::cout << result.dump(2) << '\n';
  return 0;
}

int run_spectral(const std::string& graph_path, double tol, bool force_power,
                 std::optional<double> alpha, std::optional<double> epsilon) {
  opforge::Graph g = opforge::read_edge_list_file(graph_path);
  opforge::SigmaOptions opts;
  opts.tol = tol;
  if (force_power) opts.dense_threshold = 0;
  auto report = opforge::compute_sigma(g, opts);

  Json config;
  config["graph"] = graph_path;
  config["tol"] = tol;
  config["force_power"] = force_power;
  Json out = provenance("spectral", config);
  Json report_json = opforge::to_json(report);
  for (auto& [key, value] : report_json.items()) out[key] = value;
  if (alpha && epsilon) {
    auto cert = opforge::certify_strong_resilience(g, *alpha, *epsilon, report);
    out["certificate"] = opforge::to_json(cert);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_simulate(const std::string& graph_path, const std::string& seeds_path,
                 const std::string& rounds, const std::string& tie,
                 std::optional<std::uint64_t> seed_rng,
                 const std::string& trace_out) {
  opforge::Graph g = opforge::read_edge_list_file(graph_path);
  opforge::SeedColoring seeds =
      opforge::read_seed_coloring_file(seeds_path, g.node_count());
  opforge::RoundLimit limit;
  if (rounds != "stable") {
    limit = static_cast<std::uint32_t>(std::stoul(rounds));
  }
  const std::uint64_t master = seed_rng.value_or(fresh_seed());
  opforge::Rng rng = opforge::Rng::stream(master, 0);
  auto trace = opforge::run_diffusion(g, seeds, limit,
                                      opforge::tie_rule_from_string(tie), rng,
                                      /*record_layers=*/false);

  Json config;
  config["graph"] = graph_path;
  config["seeds"] = seeds_path;
  config["rounds"] = rounds;
  config["tie"] = tie;
  config["master_seed"] = master;

  Json out = provenance("simulate", config);
  out["rounds_recorded"] = trace.rounds();
  if (trace.stabilization()) {
    out["stabilization_time"] = *trace.stabilization();
  } else {
    out["stabilization_time"] = "unreached";
  }
  const std::uint32_t last = trace.rounds();
  out["r_hat"] = trace.colored_cum(last);
  out["b_hat"] = trace.black_cum(last);
  out["w_hat"] = trace.white_cum(last);
  out["ties"] = trace.tie_count();
  out["win_colored_majority"] =
      opforge::attacker_wins(trace, last, opforge::WinMode::ColoredMajority);
  out["win_population_majority"] =
      opforge::attacker_wins(trace, last, opforge::WinMode::PopulationMajority);

  if (!trace_out.empty()) {
    std::string lines;
    std::uint64_t r_hat = 0, b_hat = 0, w_hat = 0;
    for (std::uint32_t t = 0; t <= trace.rounds(); ++t) {
      r_hat += trace.colored_at(t);
      b_hat += trace.black_at(t);
      w_hat += trace.white_at(t);
      Json row;
      row["t"] = t;
      row["r"] = trace.colored_at(t);
      row["b"] = trace.black_at(t);
      row["w"] = trace.white_at(t);
      row["r_hat"] = r_hat;
      row["b_hat"] = b_hat;
      row["w_hat"] = w_hat;
      lines += row.dump() + "\n";
    }
    write_text_file(trace_out, lines);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_attack_eval(const std::string& config_path,
                    std::optional<std::uint32_t> jobs,
                    const std::string& records_path,
                    const std::string& csv_path) {
  std::ifstream in(config_path);
  if (!in) {
    throw opforge::Error(opforge::ErrorCode::GraphLoadError,
                         "cannot open '" + config_path + "'");
  }
  Json parsed = Json::parse(in, nullptr, true, true);
  opforge::ExperimentConfig cfg = opforge::experiment_config_from_json(parsed);
  if (jobs) cfg.jobs = *jobs;

  std::vector<opforge::TrialRecord> records;
  auto stats =
      opforge::run_trials(cfg, records_path.empty() ? nullptr : &records);

  Json out = provenance("attack-eval", opforge::to_json(cfg));
  out["master_seed"] = cfg.master_seed;
  out["stats"] = opforge::to_json(stats);
  if (!records_path.empty()) {
    std::string lines;
    for (const auto& record : records) {
      Json row;
      row["trial"] = record.trial;
      row["win"] = record.win;
      row["b_hat"] = record.b_hat;
      row["w_hat"] = record.w_hat;
      if (record.stabilization) {
        row["stabilization"] = *record.stabilization;
      } else {
        row["stabilization"] = "unreached";
      }
      lines += row.dump() + "\n";
    }
    write_text_file(records_path, lines);
  }
  if (!csv_path.empty()) {
    std::string csv = "round,count\n";
    for (const auto& [round, count] : stats.stabilization_histogram) {
      csv += std::to_string(round) + "," + std::to_string(count) + "\n";
    }
    write_text_file(csv_path, csv);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_stabilize(const std::string& graph_path, double alpha,
                  std::uint64_t trials, std::optional<std::uint64_t> seed,
                  std::uint32_t jobs, const std::string& csv_path) {
  opforge::Graph g = opforge::read_edge_list_file(graph_path);
  const std::uint64_t master = seed.value_or(fresh_seed());
  auto report =
      opforge::stabilization_bound_check(g, alpha, trials, master, jobs);

  Json config;
  config["graph"] = graph_path;
  config["alpha"] = alpha;
  config["trials"] = trials;
  config["master_seed"] = master;
  Json out = provenance("stabilize", config);
  out["report"] = opforge::to_json(report);
  if (!csv_path.empty()) {
    std::string csv = "round,count\n";
    for (const auto& [round, count] : report.histogram) {
      csv += std::to_string(round) + "," + std::to_string(count) + "\n";
    }
    write_text_file(csv_path, csv);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_reduce(const std::string& graph_path, std::uint32_t k, std::uint32_t s,
               const std::string& out_path, const std::string& roles_path) {
  opforge::Graph g_prime = opforge::read_edge_list_file(graph_path);
  auto art = opforge::build_mi_instance(g_prime, k, s);

  Json config;
  config["graph"] = graph_path;
  config["k"] = k;
  config["s"] = s;
  opforge::write_edge_list_file(art.instance.graph, out_path,
                                provenance("reduce", config).dump());
  Json out = provenance("reduce", config);
  out["n"] = art.instance.graph.node_count();
  out["m"] = art.instance.graph.edge_count();
  out["b"] = art.instance.b;
  out["w"] = art.instance.w;
  out["t"] = art.instance.t;

  if (!roles_path.empty()) {
    Json roles = provenance("reduce", config);
    Json role_list = Json::array();
    for (const auto& role : art.roles) {
      role_list.push_back(opforge::role_to_string(role));
    }
    roles["roles"] = role_list;
    roles["budgets"] = Json{{"b", art.instance.b},
                            {"w", art.instance.w},
                            {"t", art.instance.t}};
    write_text_file(roles_path, roles.dump(2) + "\n");
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_mi_solve(const std::string& graph_path, std::uint32_t b,
                 std::uint32_t w, std::uint32_t t, const std::string& mode,
                 std::uint64_t trials, std::optional<std::uint64_t> seed,
                 std::uint32_t jobs) {
  opforge::MIInstance inst;
  inst.graph = opforge::read_edge_list_file(graph_path);
  inst.b = b;
  inst.w = w;
  inst.t = t;
  opforge::MIOptions opts;
  opts.method = mode == "exact" ? opforge::MIMethod::ExactExpectation
                                : opforge::MIMethod::MonteCarlo;
  opts.mc_trials = trials;
  opts.seed = seed.value_or(fresh_seed());
  opts.jobs = jobs;
  auto result = opforge::mi_bruteforce(inst, opts);

  Json config;
  config["graph"] = graph_path;
  config["b"] = b;
  config["w"] = w;
  config["t"] = t;
  config["mode"] = mode;
  config["mc_trials"] = trials;
  config["master_seed"] = opts.seed;
  Json out = provenance("mi-solve", config);
  Json result_json = opforge::to_json(result);
  for (auto& [key, value] : result_json.items()) {
    out[key] = value;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_thresholds(const opforge::ThresholdInputs& inputs) {
  auto report = opforge::compute_thresholds(inputs);
  Json out = provenance("thresholds", Json::object());
  Json report_json = opforge::to_json(report);
  for (auto& [key, value] : report_json.items()) {
    out[key] = value;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majority opinion diffusion toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "emit a graph edge list");
  auto* family_opt = generate->add_option(
      "--family", gen.family,
      "star|cycle_power|dary_tree|clique_union|random_regular|erdos_renyi");
  auto* counter_opt =
      generate->add_option("--counterexample", gen.counterexample,
                           "regular_non_expander|prop1_cycle_trees|"
                           "core_dominated|star_forest");
  family_opt->excludes(counter_opt);
  generate->add_option("--n", gen.n, "node count");
  generate->add_option("--delta", gen.delta, "cycle power radius");
  generate->add_option("--depth", gen.depth, "tree depth");
  generate->add_option("--d", gen.d, "degree / arity");
  generate->add_option("--s", gen.s, "core size or star count");
  generate->add_option("--t", gen.t, "round horizon (cycle-trees)");
  generate->add_option("--p", gen.p, "edge probability");
  generate->add_option("--alpha", gen.alpha, "attacker alpha");
  generate->add_option("--epsilon", gen.epsilon, "attacker epsilon");
  generate->add_option("--mu", gen.mu, "error probability");
  generate->add_option("--sizes", gen.sizes, "clique sizes")->delimiter(',');
  std::uint64_t gen_seed = 0;
  auto* gen_seed_opt = generate->add_option("--seed", gen_seed, "master seed");
  generate->add_option("--out", gen.out, "edge list path")->required();
  generate->add_option("--sidecar", gen.sidecar, "role sidecar JSON path");

  // spectral
  std::string sp_graph;
  double sp_tol = 1e-10;
  bool sp_force_power = false;
  double sp_alpha = 0.0, sp_epsilon = 0.0;
  auto* spectral = app.add_subcommand("spectral", "sigma and certificates");
  spectral->add_option("--graph", sp_graph, "edge list")->required();
  spectral->add_option("--tol", sp_tol, "power iteration tolerance");
  spectral->add_flag("--force-power", sp_force_power,
                     "use power iteration regardless of size");
  auto* sp_alpha_opt = spectral->add_option("--alpha", sp_alpha);
  auto* sp_eps_opt = spectral->add_option("--epsilon", sp_epsilon);
  sp_alpha_opt->needs(sp_eps_opt);
  sp_eps_opt->needs(sp_alpha_opt);

  // simulate
  std::string sim_graph, sim_seeds, sim_rounds = "stable", sim_tie = "fair";
  std::string sim_trace_out;
  std::uint64_t sim_seed = 0;
  auto* simulate = app.add_subcommand("simulate", "run one diffusion");
  simulate->add_option("--graph", sim_graph)->required();
  simulate->add_option("--seeds", sim_seeds, "seed file: lines 'node B|W'")
      ->required();
  simulate->add_option("--rounds", sim_rounds, "N or 'stable'");
  simulate->add_option("--tie", sim_tie, "fair|black|white");
  auto* sim_seed_opt =
      simulate->add_option("--seed-rng", sim_seed, "tie-coin RNG seed");
  simulate->add_option("--trace-out", sim_trace_out, "per-round JSONL path");

  // attack-eval
  std::string ae_config, ae_records, ae_csv;
  std::uint32_t ae_jobs = 1;
  auto* attack_eval =
      app.add_subcommand("attack-eval", "Monte Carlo win-rate estimation");
  attack_eval->add_option("--config", ae_config, "experiment JSON")->required();
  auto* ae_jobs_opt = attack_eval->add_option("--jobs", ae_jobs);
  ae_jobs_opt->envname("OPINION_FORGE_JOBS");
  attack_eval->add_option("--records", ae_records, "per-trial JSONL (opt-in)");
  attack_eval->add_option("--csv", ae_csv, "stabilization histogram CSV");

  // stabilize
  std::string st_graph, st_csv;
  double st_alpha = 0.1;
  std::uint64_t st_trials = 1000, st_seed = 0;
  std::uint32_t st_jobs = 1;
  auto* stabilize =
      app.add_subcommand("stabilize", "stabilization-time experiment");
  stabilize->add_option("--graph", st_graph)->required();
  stabilize->add_option("--alpha", st_alpha)->required();
  stabilize->add_option("--trials", st_trials);
  auto* st_seed_opt = stabilize->add_option("--master-seed", st_seed);
  stabilize->add_option("--jobs", st_jobs)->envname("OPINION_FORGE_JOBS");
  stabilize->add_option("--csv", st_csv, "histogram CSV path");

  // reduce
  std::string rd_graph, rd_out, rd_roles;
  std::uint32_t rd_k = 0, rd_s = 1;
  auto* reduce =
      app.add_subcommand("reduce", "clique -> minimum influence gadget");
  reduce->add_option("--graph", rd_graph, "G' edge list")->required();
  reduce->add_option("--k", rd_k, "clique size")->required();
  reduce->add_option("--s", rd_s, "gadget clique size")->required();
  reduce->add_option("--out", rd_out, "gadget edge list")->required();
  reduce->add_option("--roles", rd_roles, "role map JSON");

  // mi-solve
  std::string mi_graph, mi_mode = "mc";
  std::uint32_t mi_b = 0, mi_w = 0, mi_t = 2, mi_jobs = 1;
  std::uint64_t mi_trials = 1000, mi_seed = 0;
  auto* mi_solve = app.add_subcommand("mi-solve", "brute-force MI oracle");
  mi_solve->add_option("--graph", mi_graph)->required();
  mi_solve->add_option("--b", mi_b)->required();
  mi_solve->add_option("--w", mi_w)->required();
  mi_solve->add_option("--t", mi_t)->required();
  mi_solve->add_option("--mode", mi_mode, "exact|mc");
  mi_solve->add_option("--trials", mi_trials, "MC trials per placement");
  auto* mi_seed_opt = mi_solve->add_option("--seed", mi_seed);
  mi_solve->add_option("--jobs", mi_jobs)->envname("OPINION_FORGE_JOBS");

  // thresholds
  opforge::ThresholdInputs th;
  bool th_d_given = false;
  auto* thresholds =
      app.add_subcommand("thresholds", "closed-form theorem thresholds");
  thresholds->add_option("--n", th.n)->required();
  thresholds->add_option("--alpha", th.alpha)->required();
  thresholds->add_option("--epsilon", th.epsilon)->required();
  thresholds->add_option("--mu", th.mu)->required();
  thresholds->add_option("--t", th.t);
  thresholds->add_option("--delta", th.delta, "minimum degree");
  thresholds->add_option("--Delta", th.max_degree, "maximum degree");
  thresholds->add_option("--d", th.d, "tree arity (defaults to Delta)")
      ->each([&](const std::string&) { th_d_given = true; });
  thresholds->add_option("--C", th.c);
  thresholds->add_option("--Cprime", th.c_prime);
  thresholds->add_option("--Cdoubleprime", th.c_double_prime);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      if (gen.family.empty() && gen.counterexample.empty()) {
        std::cerr << "generate needs --family or --counterexample\n";
        return 2;
      }
      GenerateArgs args = gen;
      if (gen_seed_opt->count() > 0) args.seed = gen_seed;
      return run_generate(args);
    }
    if (*spectral) {
      std::optional<double> a, e;
      if (sp_alpha_opt->count() > 0) {
        a = sp_alpha;
        e = sp_epsilon;
      }
      return run_spectral(sp_graph, sp_tol, sp_force_power, a, e);
    }
    if (*simulate) {
      std::optional<std::uint64_t> seed;
      if (sim_seed_opt->count() > 0) seed = sim_seed;
      return run_simulate(sim_graph, sim_seeds, sim_rounds, sim_tie, seed,
                          sim_trace_out);
    }
    if (*attack_eval) {
      std::optional<std::uint32_t> jobs;
      if (ae_jobs_opt->count() > 0) jobs = ae_jobs;
      return run_attack_eval(ae_config, jobs, ae_records, ae_csv);
    }
    if (*stabilize) {
      std::optional<std::uint64_t> seed;
      if (st_seed_opt->count() > 0) seed = st_seed;
      return run_stabilize(st_graph, st_alpha, st_trials, seed, st_jobs,
                           st_csv);
    }
    if (*reduce) {
      return run_reduce(rd_graph, rd_k, rd_s, rd_out, rd_roles);
    }
    if (*mi_solve) {
      std::optional<std::uint64_t> seed;
      if (mi_seed_opt->count() > 0) seed = mi_seed;
      return run_mi_solve(mi_graph, mi_b, mi_w, mi_t, mi_mode, mi_trials, seed,
                          mi_jobs);
    }
    if (*thresholds) {
      if (!th_d_given) th.d = th.max_degree;
      return run_thresholds(th);
    }
  } catch (const opforge::Error& err) {
    Json out;
    out["error"] = err.code_name();
    out["message"] = err.what();
    std::cerr << out.dump() << '\n';
    return 1;
  } catch (const std::exception& err) {
    Json out;
    out["error"] = "Unexpected";
    out["message"] = err.what();
    std::cerr << out.dump() << '\n';
    return 1;
  }
  return 2;
}
