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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  std::string out_path = "/tmp/opforge_cli_out_" + std::to_string(counter);
  std::string err_path = "/tmp/opforge_cli_err_" + std::to_string(counter);
  ++counter;
  std::string cmd = std::string(OPINION_FORGE_BIN) + " " + args + " > " +
                    out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("thresholds subcommand emits the report") {
  auto r = run("thresholds --n 1000 --alpha 0.2 --epsilon 0.1 --mu 0.05 "
               "--t 3 --delta 3 --Delta 10");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["subcommand"] == "thresholds");
  CHECK(std::abs(j["t_star_2"].get<double>() - 70.0776) < 1e-3);
}

TEST_CASE("missing graph file exits 1 with a structured error") {
  auto r = run("spectral --graph /tmp/definitely_missing_opforge.el");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.err);
  CHECK(j["error"] == "GraphLoadError");
}

TEST_CASE("usage errors exit 2") {
  auto r = run("simulate --graph only.el");  // --seeds missing
  CHECK(r.exit_code != 0);
  CHECK(r.exit_code != 1);
}

TEST_CASE("generate output is consumed by the other subcommands") {
  auto gen = run("generate --family star --n 40 --seed 9 "
                 "--out /tmp/opforge_star40.el");
  REQUIRE(gen.exit_code == 0);

  auto spectral = run("spectral --graph /tmp/opforge_star40.el");
  REQUIRE(spectral.exit_code == 0);
  auto sj = nlohmann::json::parse(spectral.out);
  CHECK(std::abs(sj["sigma"].get<double>() - 1.0) < 1e-9);  // stars are bipartite

  std::ofstream seeds("/tmp/opforge_star40.seeds");
  seeds << "0 B\n1 W\n2 W\n";
  seeds.close();
  auto sim = run("simulate --graph /tmp/opforge_star40.el "
                 "--seeds /tmp/opforge_star40.seeds --rounds stable "
                 "--tie fair --seed-rng 4");
  REQUIRE(sim.exit_code == 0);
  auto simj = nlohmann::json::parse(sim.out);
  CHECK(simj["stabilization_time"] == 1);
  CHECK(simj["b_hat"] == 38);
  CHECK(simj["w_hat"] == 2);
}

TEST_CASE("generate is reproducible from its recorded seed") {
  auto a = run("generate --family erdos_renyi --n 60 --p 0.2 --seed 123 "
               "--out /tmp/opforge_er_a.el");
  auto b = run("generate --family erdos_renyi --n 60 --p 0.2 --seed 123 "
               "--out /tmp/opforge_er_b.el");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(slurp("/tmp/opforge_er_a.el") == slurp("/tmp/opforge_er_b.el"));

  auto c = run("generate --family erdos_renyi --n 60 --p 0.2 --seed 124 "
               "--out /tmp/opforge_er_c.el");
  REQUIRE(c.exit_code == 0);
  CHECK(slurp("/tmp/opforge_er_a.el") != slurp("/tmp/opforge_er_c.el"));
}

TEST_CASE("attack-eval reruns bit-identically from its embedded config") {
  {
    std::ofstream cfg("/tmp/opforge_cfg.json");
    cfg << R"({
      "graph": {"family": {"family": "star", "n": 100}},
      "attacker": {"kind": "weak", "alpha": 0.3, "epsilon": 0.1},
      "rounds": "stable",
      "tie": "fair",
      "trials": 500,
      "master_seed": 31415,
      "win_mode": "colored_majority"
    })";
  }
  auto first = run("attack-eval --config /tmp/opforge_cfg.json");
  REQUIRE(first.exit_code == 0);
  auto fj = nlohmann::json::parse(first.out);

  // Re-run strictly from the provenance block.
  {
    std::ofstream cfg("/tmp/opforge_cfg2.json");
    cfg << fj["config"].dump();
  }
  auto second = run("attack-eval --config /tmp/opforge_cfg2.json");
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);

  // And independent of the job count.
  auto more_jobs = run("attack-eval --config /tmp/opforge_cfg.json --jobs 2");
  REQUIRE(more_jobs.exit_code == 0);
  auto mj = nlohmann::json::parse(more_jobs.out);
  CHECK(mj["stats"] == fj["stats"]);
}

TEST_CASE("reduce and mi-solve round trip") {
  {
    std::ofstream g("/tmp/opforge_edge.el");
    g << "2 1\n0 1\n";
  }
  auto reduce = run("reduce --graph /tmp/opforge_edge.el --k 2 --s 1 "
                    "--out /tmp/opforge_gadget.el --roles /tmp/opforge_roles.json");
  REQUIRE(reduce.exit_code == 0);
  auto rj = nlohmann::json::parse(reduce.out);
  CHECK(rj["n"] == 7);
  CHECK(rj["b"] == 2);
  CHECK(rj["w"] == 1);

  auto solve = run("mi-solve --graph /tmp/opforge_gadget.el --b 2 --w 1 --t 2 "
                   "--mode exact --seed 5");
  REQUIRE(solve.exit_code == 0);
  auto sj = nlohmann::json::parse(solve.out);
  CHECK(sj["optimum"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("stabilize reports quantiles against the closed-form bound") {
  auto gen = run("generate --family cycle_power --n 500 --delta 2 --seed 3 "
                 "--out /tmp/opforge_cyc.el");
  REQUIRE(gen.exit_code == 0);
  auto r = run("stabilize --graph /tmp/opforge_cyc.el --alpha 0.2 "
               "--trials 100 --master-seed 6");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["report"]["fraction_within_t_star_2"] == 1.0);
}
