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

#include <cmath>

#include "opforge/attackers.hpp"
#include "opforge/generators.hpp"

using namespace opforge;

TEST_CASE("strong degree-greedy on a star blacks the center") {
  Graph g = star(10);
  AttackerSpec spec;
  spec.kind = AttackerKind::Strong;
  spec.alpha = 0.4;
  spec.epsilon = 0.25;
  spec.strategy = SeedStrategy::DegreeGreedyBlack;
  Rng rng(1);
  auto seed = strong_seed(g, spec, rng);
  CHECK(seed.size() == 4);
  CHECK(seed.count(Color::White) == 3);
  CHECK(seed.count(Color::Black) == 1);
  // The one black seed is the (highest-degree) center.
  for (std::size_t i = 0; i < seed.nodes.size(); ++i) {
    if (seed.colors[i] == Color::Black) CHECK(seed.nodes[i] == 0);
  }
}

TEST_CASE("strong color counts are exact for every strategy and size") {
  Rng meta(2);
  for (int rep = 0; rep < 30; ++rep) {
    Node n = 10 + static_cast<Node>(meta.uniform_below(200));
    Graph g = star(n);
    AttackerSpec spec;
    spec.kind = AttackerKind::Strong;
    spec.alpha = 0.05 + 0.4 * meta.next_double();
    spec.epsilon = 0.05 + 0.4 * meta.next_double();
    spec.strategy = meta.fair_coin() ? SeedStrategy::DegreeGreedyBlack
                                     : SeedStrategy::RandomBaseline;
    auto seed = strong_seed(g, spec, meta);
    const std::uint64_t k = round_half_up_count(spec.alpha * n);
    CHECK(seed.size() == k);
    CHECK(seed.count(Color::White) ==
          round_half_up_count((0.5 + spec.epsilon) * static_cast<double>(k)));
  }
}

TEST_CASE("single-seed rounding edge: the lone seed is white") {
  Graph g = star(12);
  AttackerSpec spec;
  spec.kind = AttackerKind::Strong;
  spec.alpha = 0.05;  // round(0.6) = 1 seed
  spec.epsilon = 0.1;
  spec.strategy = SeedStrategy::DegreeGreedyBlack;
  Rng rng(3);
  auto seed = strong_seed(g, spec, rng);
  CHECK(seed.size() == 1);
  CHECK(seed.count(Color::White) == 1);
  CHECK(seed.count(Color::Black) == 0);
}

TEST_CASE("component split reproduces the two-component winning play") {
  CounterexampleSpec cspec;
  cspec.kind = Counterexample::RegularNonExpander;
  cspec.n = 40;
  cspec.d = 2;
  cspec.alpha = 0.4;
  cspec.epsilon = 0.25;
  Rng rng(4);
  auto art = generate_counterexample(cspec, rng);
  // white component size = round(0.75*0.4*40) = 12 = round((1/2+eps)*k).
  AttackerSpec spec;
  spec.kind = AttackerKind::Strong;
  spec.alpha = 0.4;
  spec.epsilon = 0.25;
  spec.strategy = SeedStrategy::ComponentSplit;
  auto seed = strong_seed(art.graph, spec, rng);
  CHECK(seed.size() == 16);
  CHECK(seed.count(Color::White) == 12);
  for (std::size_t i = 0; i < seed.nodes.size(); ++i) {
    if (seed.colors[i] == Color::White) CHECK(seed.nodes[i] < 12);
    else CHECK(seed.nodes[i] >= 12);
  }
}

TEST_CASE("component split fails on connected graphs") {
  Graph g = star(20);
  AttackerSpec spec;
  spec.kind = AttackerKind::Strong;
  spec.alpha = 0.3;
  spec.epsilon = 0.1;
  spec.strategy = SeedStrategy::ComponentSplit;
  Rng rng(5);
  try {
    strong_seed(g, spec, rng);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StrategyInapplicable);
  }
}

TEST_CASE("explicit hint size must match the budget") {
  Graph g = star(10);
  AttackerSpec spec;
  spec.kind = AttackerKind::Moderate;
  spec.alpha = 0.4;
  spec.epsilon = 0.1;
  spec.strategy = SeedStrategy::Explicit;
  spec.seed_hint = {0, 1};  // budget is 4
  Rng rng(6);
  try {
    moderate_seed(g, spec, rng);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HintSizeMismatch);
  }
}

TEST_CASE("moderate color marginal matches (1/2+eps) within 3 sigma") {
  Graph g = star(1000);
  AttackerSpec spec;
  spec.kind = AttackerKind::Moderate;
  spec.alpha = 0.3;
  spec.epsilon = 0.15;
  spec.strategy = SeedStrategy::RandomBaseline;
  const int draws = 400;
  std::uint64_t whites = 0, total = 0;
  for (int i = 0; i < draws; ++i) {
    Rng rng = Rng::stream(42, static_cast<std::uint64_t>(i));
    auto seed = moderate_seed(g, spec, rng);
    CHECK(seed.size() == 300);
    whites += seed.count(Color::White);
    total += seed.size();
  }
  const double p = 0.5 + spec.epsilon;
  const double observed = static_cast<double>(whites) / total;
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(total));
  CHECK(std::abs(observed - p) <= 3 * sigma);
}

TEST_CASE("weak attacker marginals and degenerate alphas") {
  Graph g = star(500);
  AttackerSpec spec;
  spec.kind = AttackerKind::Weak;
  spec.epsilon = 0.1;

  SUBCASE("alpha 1 seeds everyone") {
    spec.alpha = 1.0;
    Rng rng(7);
    auto seed = weak_seed(g, spec, rng);
    CHECK(seed.size() == 500);
  }
  SUBCASE("alpha 0 seeds no one") {
    spec.alpha = 0.0;
    Rng rng(8);
    auto seed = weak_seed(g, spec, rng);
    CHECK(seed.size() == 0);
  }
  SUBCASE("mean seed count is alpha*n within 3 sigma") {
    spec.alpha = 0.3;
    const int draws = 2000;
    std::uint64_t total = 0;
    for (int i = 0; i < draws; ++i) {
      Rng rng = Rng::stream(43, static_cast<std::uint64_t>(i));
      total += weak_seed(g, spec, rng).size();
    }
    const double n_draws = static_cast<double>(draws) * 500.0;
    const double observed = static_cast<double>(total) / n_draws;
    const double sigma = std::sqrt(0.3 * 0.7 / n_draws);
    CHECK(std::abs(observed - 0.3) <= 3 * sigma);
  }
  SUBCASE("per-node seed and color marginals") {
    spec.alpha = 0.3;
    const int draws = 4000;
    std::uint64_t seeded_first = 0, seeded_last = 0, white_first = 0;
    for (int i = 0; i < draws; ++i) {
      Rng rng = Rng::stream(46, static_cast<std::uint64_t>(i));
      auto seed = weak_seed(g, spec, rng);
      for (std::size_t j = 0; j < seed.nodes.size(); ++j) {
        if (seed.nodes[j] == 0) {
          ++seeded_first;
          if (seed.colors[j] == Color::White) ++white_first;
        }
        if (seed.nodes[j] == 499) ++seeded_last;
      }
    }
    const double seed_sigma = std::sqrt(0.3 * 0.7 / draws);
    CHECK(std::abs(seeded_first / double(draws) - 0.3) <= 3 * seed_sigma);
    CHECK(std::abs(seeded_last / double(draws) - 0.3) <= 3 * seed_sigma);
    const double color_sigma =
        std::sqrt(0.6 * 0.4 / static_cast<double>(seeded_first));
    CHECK(std::abs(white_first / double(seeded_first) - 0.6) <=
          3 * color_sigma);
  }
}

TEST_CASE("moderate w0 concentration (seed-coloring bound)") {
  // (1/2+eps)*alpha*n - alpha*eps*n/2 <= w0 <= (1/2+eps)*alpha*n + alpha*eps*n/2
  // holds with at least the Chernoff-implied frequency.
  Graph g = star(10000);
  AttackerSpec spec;
  spec.kind = AttackerKind::Moderate;
  spec.alpha = 0.3;
  spec.epsilon = 0.3;
  spec.strategy = SeedStrategy::DegreeGreedy;
  const double n = 10000.0;
  const double expectation = (0.5 + spec.epsilon) * spec.alpha * n;
  const double margin = spec.alpha * spec.epsilon * n / 2.0;
  const double eta = spec.epsilon / 2.0;
  const double level = 1.0 - std::exp(-eta * eta * expectation / 3.0) -
                       std::exp(-eta * eta * expectation / 2.0);
  REQUIRE(level > 0.999);

  const int draws = 600;
  int within = 0;
  for (int i = 0; i < draws; ++i) {
    Rng rng = Rng::stream(44, static_cast<std::uint64_t>(i));
    auto seed = moderate_seed(g, spec, rng);
    const double w0 = static_cast<double>(seed.count(Color::White));
    if (w0 >= expectation - margin && w0 <= expectation + margin) ++within;
  }
  CHECK(static_cast<double>(within) / draws >= 0.999 - 3.0 / draws);
}

TEST_CASE("weak w0 concentration around r0/2 + alpha*eps*n") {
  // r0/2 + alpha*eps*n/2 <= w0 <= r0/2 + 3*alpha*eps*n/2 with high frequency.
  Graph g = star(10000);
  AttackerSpec spec;
  spec.kind = AttackerKind::Weak;
  spec.alpha = 0.3;
  spec.epsilon = 0.3;
  const double n = 10000.0;
  const int draws = 500;
  int within = 0;
  for (int i = 0; i < draws; ++i) {
    Rng rng = Rng::stream(45, static_cast<std::uint64_t>(i));
    auto seed = weak_seed(g, spec, rng);
    const double r0 = static_cast<double>(seed.size());
    const double w0 = static_cast<double>(seed.count(Color::White));
    const double lo = r0 / 2 + spec.alpha * spec.epsilon * n / 2;
    const double hi = r0 / 2 + 3 * spec.alpha * spec.epsilon * n / 2;
    if (w0 >= lo && w0 <= hi) ++within;
  }
  CHECK(static_cast<double>(within) / draws >= 0.99);
}

TEST_CASE("parameter validation") {
  Graph g = star(10);
  Rng rng(9);
  AttackerSpec spec;
  spec.kind = AttackerKind::Strong;
  spec.alpha = 0.6;
  spec.epsilon = 0.1;
  spec.strategy = SeedStrategy::DegreeGreedyBlack;
  try {
    strong_seed(g, spec, rng);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParameters);
  }
}
