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

#include "opforge/generators.hpp"
#include "opforge/spectral.hpp"
#include "support/test_helpers.hpp"

using namespace opforge;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("complete graph sigma is 1/(n-1)") {
  for (Node n : {4u, 10u, 50u}) {
    Graph g = clique_union({n});
    auto report = compute_sigma(g);
    CHECK(std::abs(report.sigma - 1.0 / (n - 1.0)) <= 1e-9);
    CHECK(report.method == SigmaMethod::DenseEigensolve);
  }
}

TEST_CASE("cycle spectra: lambda2 is cos(2pi/n), sigma includes the bottom") {
  SUBCASE("even cycle is bipartite, sigma = 1") {
    auto report = compute_sigma(cycle_power(6, 1));
    REQUIRE(report.lambda2.has_value());
    CHECK(std::abs(*report.lambda2 - 0.5) <= 1e-9);
    CHECK(std::abs(report.sigma - 1.0) <= 1e-9);
    CHECK(std::abs(*report.lambda_min + 1.0) <= 1e-9);
  }
  SUBCASE("odd cycle sigma = cos(pi/n)") {
    auto report = compute_sigma(cycle_power(5, 1));
    CHECK(std::abs(*report.lambda2 - std::cos(2 * kPi / 5)) <= 1e-9);
    CHECK(std::abs(report.sigma - std::cos(kPi / 5)) <= 1e-9);
  }
}

TEST_CASE("disconnected graph has sigma 1") {
  Graph g = clique_union({3, 3});
  auto report = compute_sigma(g);
  CHECK(std::abs(report.sigma - 1.0) <= 1e-9);
}

TEST_CASE("isolated node rejected") {
  Graph g = build_graph(3, {{0, 1}});
  try {
    compute_sigma(g);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsolatedNode);
  }
}

TEST_CASE("power iteration matches dense eigensolve") {
  Rng meta(1234);
  SigmaOptions power_opts;
  power_opts.dense_threshold = 0;
  power_opts.tol = 1e-9;
  for (int rep = 0; rep < 12; ++rep) {
    Node n = 10 + static_cast<Node>(meta.uniform_below(120));
    Graph g = testing::random_connected_graph(n, 1.3, meta);
    auto dense = compute_sigma(g);
    auto power = compute_sigma(g, power_opts);
    CHECK(power.method == SigmaMethod::PowerIterationDeflation);
    CHECK(std::abs(dense.sigma - power.sigma) < 1e-6);
  }
}

TEST_CASE("mixing lemma audit never sees positive slack on regular graphs") {
  Rng meta(777);
  for (int rep = 0; rep < 5; ++rep) {
    Node n = 20 + 2 * static_cast<Node>(meta.uniform_below(20));
    std::uint32_t d = 3 + static_cast<std::uint32_t>(meta.uniform_below(5));
    if ((static_cast<std::uint64_t>(n) * d) % 2 == 1) ++d;
    Graph g = random_regular(n, d, meta);
    auto report = compute_sigma(g);
    Rng audit_rng(meta.next_u64());
    auto audit = mixing_lemma_audit(g, report.sigma, 500, audit_rng);
    CHECK(audit.max_slack <= 1e-9);
  }
}

TEST_CASE("K5 mixing numbers from the definition") {
  Graph g = clique_union({5});
  auto report = compute_sigma(g);
  CHECK(std::abs(report.sigma - 0.25) <= 1e-12);
  // e({0,1},{2,3}) = 4 ordered pairs; |4 - 2*2*4/5| = 0.8 <= sigma*4*2 = 2.
  CHECK(edge_count_between(g, {0, 1}, {2, 3}) == 4);
  CHECK(std::abs(4.0 - 2.0 * 2.0 * 4.0 / 5.0) <= report.sigma * 4.0 * 2.0);
}

TEST_CASE("audit rejects irregular graphs") {
  Graph g = star(6);
  Rng rng(1);
  try {
    mixing_lemma_audit(g, 0.5, 10, rng);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRegular);
  }
}

TEST_CASE("power iteration reports non-convergence honestly") {
  Rng meta(888);
  Graph g = testing::random_connected_graph(40, 1.0, meta);
  SigmaOptions opts;
  opts.dense_threshold = 0;
  opts.tol = 1e-18;  // below the floating-point floor
  opts.max_iterations = 3;
  try {
    compute_sigma(g, opts);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoConvergence);
  }
}

TEST_CASE("certificates") {
  SUBCASE("complete graph certifies") {
    Graph g = clique_union({100});
    auto report = compute_sigma(g);
    auto cert = certify_strong_resilience(g, 0.2, 0.1, report);
    CHECK(cert.verdict == CertVerdict::Resilient);
    CHECK(cert.condition_checked == CertCondition::RegularThm2);
    CHECK(cert.threshold ==
          doctest::Approx(0.1 * std::sqrt(0.2 * 0.8)).epsilon(1e-12));
  }
  SUBCASE("C20 stays unknown") {
    Graph g = cycle_power(20, 1);
    auto report = compute_sigma(g);
    auto cert = certify_strong_resilience(g, 0.2, 0.1, report);
    CHECK(cert.verdict == CertVerdict::Unknown);
  }
  SUBCASE("irregular threshold at gamma=1 equals the regular one") {
    const double alpha = 0.3, eps = 0.25;
    const double root = std::sqrt(alpha * (1 - alpha));
    const double gamma = 1.0;
    const double irregular =
        ((1 + gamma) * eps / 2 - (1 - gamma) / 4) * root;
    CHECK(irregular == doctest::Approx(eps * root).epsilon(1e-15));
  }
  SUBCASE("irregular graph uses the gamma-discounted threshold") {
    // Star-like irregular graph: gamma tiny, threshold negative, so Unknown.
    Graph g = star(30);
    auto report = compute_sigma(g);
    auto cert = certify_strong_resilience(g, 0.3, 0.4, report);
    CHECK(cert.condition_checked == CertCondition::IrregularVariant);
    CHECK(cert.verdict == CertVerdict::Unknown);
  }
  SUBCASE("parameter validation") {
    Graph g = clique_union({5});
    auto report = compute_sigma(g);
    try {
      certify_strong_resilience(g, 0.7, 0.1, report);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParameters);
    }
  }
}
