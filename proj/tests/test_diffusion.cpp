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

#include "opforge/diffusion.hpp"
#include "opforge/generators.hpp"
#include "support/test_helpers.hpp"

using namespace opforge;

namespace {

SeedColoring seeds_of(const Graph& g, std::vector<Node> nodes,
                      std::vector<Color> colors) {
  return SeedColoring::make(std::move(nodes), std::move(colors),
                            g.node_count());
}

}  // namespace

TEST_CASE("star: black center plus three white leaves floods black") {
  Graph g = star(10);
  auto seed = seeds_of(g, {0, 1, 2, 3},
                       {Color::Black, Color::White, Color::White, Color::White});
  Rng rng(1);
  auto trace = run_diffusion(g, seed, 1, TieRule::FairCoin, rng);
  CHECK(trace.black_cum(1) == 7);
  CHECK(trace.white_cum(1) == 3);
  CHECK(trace.tie_count() == 0);
  CHECK(attacker_wins(trace, 1, WinMode::ColoredMajority));
}

TEST_CASE("path tie resolves by fair coin at rate one half") {
  Graph g = build_graph(3, {{0, 1}, {1, 2}});
  auto seed = seeds_of(g, {0, 2}, {Color::Black, Color::White});
  std::uint64_t black = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    Rng rng = Rng::stream(2024, static_cast<std::uint64_t>(i));
    auto trace = run_diffusion(g, seed, std::nullopt, TieRule::FairCoin, rng);
    CHECK(trace.tie_count() == 1);
    if (trace.final_colors()[1] == Color::Black) ++black;
  }
  double rate = static_cast<double>(black) / trials;
  CHECK(rate > 0.48);
  CHECK(rate < 0.52);
}

TEST_CASE("all nodes seeded white keeps counts constant") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto seed = seeds_of(g, {0, 1, 2, 3},
                       {Color::White, Color::White, Color::White, Color::White});
  Rng rng(3);
  auto trace = run_diffusion(g, seed, std::nullopt, TieRule::FairCoin, rng);
  CHECK(trace.rounds() == 0);
  CHECK(trace.stabilization() == 0);
  CHECK(trace.white_cum(0) == 4);
  CHECK_FALSE(attacker_wins(trace, 0, WinMode::ColoredMajority));
  CHECK_FALSE(attacker_wins(trace, 0, WinMode::PopulationMajority));
}

TEST_CASE("win on exact tie counts for the attacker") {
  Graph g = build_graph(2, {{0, 1}});
  auto seed = seeds_of(g, {0, 1}, {Color::Black, Color::White});
  Rng rng(4);
  auto trace = run_diffusion(g, seed, std::nullopt, TieRule::FairCoin, rng);
  CHECK(attacker_wins(trace, 0, WinMode::ColoredMajority));
  CHECK_FALSE(attacker_wins(trace, 0, WinMode::PopulationMajority));
}

TEST_CASE("round queries past stabilization stay constant, past cut-off throw") {
  Graph g = build_graph(3, {{0, 1}, {1, 2}});
  auto seed = seeds_of(g, {0}, {Color::Black});
  Rng rng(5);
  auto stable = run_diffusion(g, seed, std::nullopt, TieRule::FairCoin, rng);
  CHECK(stable.stabilization() == 2);
  CHECK(stable.black_cum(10) == 3);  // constant after stabilization

  Rng rng2(5);
  auto cut = run_diffusion(g, seed, 1, TieRule::FairCoin, rng2);
  CHECK_FALSE(cut.stabilized());
  CHECK(cut.black_cum(1) == 2);
  try {
    (void)cut.black_cum(2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RoundOutOfRange);
  }
}

TEST_CASE("empty seed set rejected") {
  Graph g = build_graph(2, {{0, 1}});
  SeedColoring empty;
  Rng rng(6);
  try {
    run_diffusion(g, empty, std::nullopt, TieRule::FairCoin, rng);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySeedSet);
  }
}

TEST_CASE("stabilization time examples") {
  SUBCASE("path of five from one end") {
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Rng rng(7);
    auto trace = run_diffusion(g, seeds_of(g, {0}, {Color::Black}),
                               std::nullopt, TieRule::FairCoin, rng);
    CHECK(stabilization_time(trace) == 4);
  }
  SUBCASE("all seeded is zero") {
    Graph g = build_graph(3, {{0, 1}, {1, 2}});
    Rng rng(8);
    auto trace = run_diffusion(
        g, seeds_of(g, {0, 1, 2}, {Color::Black, Color::Black, Color::Black}),
        std::nullopt, TieRule::FairCoin, rng);
    CHECK(stabilization_time(trace) == 0);
  }
  SUBCASE("cycle C10 from one node") {
    Graph g = cycle_power(10, 1);
    Rng rng(9);
    auto trace = run_diffusion(g, seeds_of(g, {0}, {Color::White}),
                               std::nullopt, TieRule::FairCoin, rng);
    CHECK(stabilization_time(trace) == 5);
  }
  SUBCASE("disconnected graph throws") {
    Graph g = build_graph(3, {{0, 1}});
    Rng rng(10);
    auto trace = run_diffusion(g, seeds_of(g, {0}, {Color::Black}),
                               std::nullopt, TieRule::FairCoin, rng);
    try {
      stabilization_time(trace);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Disconnected);
    }
  }
}

TEST_CASE("engine matches the naive synchronous oracle exactly") {
  Rng meta(2718);
  for (int rep = 0; rep < 40; ++rep) {
    Node n = 4 + static_cast<Node>(meta.uniform_below(40));
    Graph g = testing::random_connected_graph(n, 1.0, meta);
    std::uint64_t seeds = 1 + meta.uniform_below(n);
    auto seed = testing::random_seed_coloring(g, seeds, meta);
    RoundLimit limit;
    if (meta.fair_coin()) limit = static_cast<std::uint32_t>(meta.uniform_below(5));
    TieRule tie = static_cast<TieRule>(meta.uniform_below(3));
    std::uint64_t run_seed = meta.next_u64();

    Rng engine_rng(run_seed);
    auto trace = run_diffusion(g, seed, limit, tie, engine_rng);
    Rng naive_rng(run_seed);
    auto naive = testing::naive_diffusion(g, seed, limit, tie, naive_rng);

    REQUIRE(trace.per_round().size() == naive.per_round.size());
    for (std::size_t t = 0; t < naive.per_round.size(); ++t) {
      CHECK(trace.per_round()[t].colored == naive.per_round[t].colored);
      CHECK(trace.per_round()[t].black == naive.per_round[t].black);
      CHECK(trace.per_round()[t].white == naive.per_round[t].white);
    }
    CHECK(trace.final_colors() == naive.colors);
    CHECK(trace.stabilization() == naive.stabilization);
  }
}

TEST_CASE("round-t colored set equals the BFS layer") {
  Rng meta(31415);
  for (int rep = 0; rep < 20; ++rep) {
    Node n = 4 + static_cast<Node>(meta.uniform_below(30));
    Graph g = testing::random_connected_graph(n, 0.7, meta);
    auto seed = testing::random_seed_coloring(g, 1 + meta.uniform_below(n / 2 + 1),
                                              meta);
    Rng rng(meta.next_u64());
    auto trace = run_diffusion(g, seed, std::nullopt, TieRule::FairCoin, rng,
                               /*record_layers=*/true);
    auto layers = layers_from(g, seed.nodes);
    REQUIRE(trace.layers().size() == layers.layers.size());
    for (std::size_t t = 0; t < layers.layers.size(); ++t) {
      CHECK(trace.layers()[t] == layers.layers[t]);
    }
  }
}

TEST_CASE("determinism and monotone bookkeeping") {
  Rng meta(555);
  Graph g = testing::random_connected_graph(60, 1.0, meta);
  auto seed = testing::random_seed_coloring(g, 9, meta);
  Rng a(77), b(77);
  auto t1 = run_diffusion(g, seed, std::nullopt, TieRule::FairCoin, a);
  auto t2 = run_diffusion(g, seed, std::nullopt, TieRule::FairCoin, b);
  CHECK(t1.final_colors() == t2.final_colors());
  CHECK(t1.tie_count() == t2.tie_count());

  std::uint64_t prev = 0;
  for (std::uint32_t t = 0; t <= t1.rounds(); ++t) {
    std::uint64_t r_hat = t1.colored_cum(t);
    CHECK(r_hat >= prev);
    prev = r_hat;
    CHECK(t1.black_cum(t) + t1.white_cum(t) == r_hat);
  }
}

TEST_CASE("stabilization bounded by diameter") {
  Rng meta(161803);
  for (int rep = 0; rep < 25; ++rep) {
    Node n = 5 + static_cast<Node>(meta.uniform_below(35));
    Graph g = testing::random_connected_graph(n, 0.6, meta);
    auto stats = graph_stats(g);
    REQUIRE(stats.diameter.has_value());
    Node s = static_cast<Node>(meta.uniform_below(n));
    Rng rng(meta.next_u64());
    auto trace = run_diffusion(g, seeds_of(g, {s}, {Color::Black}),
                               std::nullopt, TieRule::FairCoin, rng);
    CHECK(stabilization_time(trace) <= *stats.diameter);
  }
}
