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

#include "opforge/errors.hpp"
#include "opforge/stats.hpp"

using namespace opforge;

namespace {

double binomial_upper_tail(std::uint64_t n, std::uint64_t k, double p) {
  // P(X >= k), direct summation oracle for small n.
  double total = 0.0;
  for (std::uint64_t j = k; j <= n; ++j) {
    double log_term = std::lgamma(static_cast<double>(n) + 1) -
                      std::lgamma(static_cast<double>(j) + 1) -
                      std::lgamma(static_cast<double>(n - j) + 1) +
                      j * std::log(p) + (n - j) * std::log1p(-p);
    total += std::exp(log_term);
  }
  return total;
}

double binomial_lower_tail(std::uint64_t n, std::uint64_t k, double p) {
  double total = 0.0;
  for (std::uint64_t j = 0; j <= k; ++j) {
    double log_term = std::lgamma(static_cast<double>(n) + 1) -
                      std::lgamma(static_cast<double>(j) + 1) -
                      std::lgamma(static_cast<double>(n - j) + 1) +
                      j * std::log(p) + (n - j) * std::log1p(-p);
    total += std::exp(log_term);
  }
  return total;
}

}  // namespace

TEST_CASE("incomplete beta closed forms") {
  for (double x : {0.1, 0.37, 0.5, 0.81}) {
    for (double b : {1.0, 2.0, 5.0}) {
      CHECK(regularized_incomplete_beta(1.0, b, x) ==
            doctest::Approx(1.0 - std::pow(1.0 - x, b)).epsilon(1e-12));
      CHECK(regularized_incomplete_beta(b, 1.0, x) ==
            doctest::Approx(std::pow(x, b)).epsilon(1e-12));
    }
  }
}

TEST_CASE("incomplete beta symmetry and bounds") {
  for (double a : {0.5, 2.0, 7.5}) {
    for (double b : {1.5, 4.0}) {
      for (double x : {0.2, 0.5, 0.9}) {
        double lhs = regularized_incomplete_beta(a, b, x);
        double rhs = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(lhs >= 0.0);
        CHECK(lhs <= 1.0);
      }
    }
  }
  CHECK(regularized_incomplete_beta(3.0, 4.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(3.0, 4.0, 1.0) == 1.0);
}

TEST_CASE("clopper-pearson endpoints solve the binomial tail equations") {
  const double level = 0.99;
  const double tail = (1.0 - level) / 2.0;
  for (std::uint64_t n : {10ull, 25ull, 40ull}) {
    for (std::uint64_t k = 1; k < n; k += 3) {
      Interval ci = clopper_pearson(k, n, level);
      // Defining property, checked against the direct-summation oracle.
      CHECK(binomial_upper_tail(n, k, ci.low) ==
            doctest::Approx(tail).epsilon(1e-7));
      CHECK(binomial_lower_tail(n, k, ci.high) ==
            doctest::Approx(tail).epsilon(1e-7));
      CHECK(ci.low < static_cast<double>(k) / n);
      CHECK(ci.high > static_cast<double>(k) / n);
    }
  }
}

TEST_CASE("clopper-pearson boundary closed forms") {
  const double level = 0.95;
  const double tail = 0.025;
  Interval zero = clopper_pearson(0, 30, level);
  CHECK(zero.low == 0.0);
  CHECK(zero.high ==
        doctest::Approx(1.0 - std::pow(tail, 1.0 / 30.0)).epsilon(1e-12));
  Interval full = clopper_pearson(30, 30, level);
  CHECK(full.high == 1.0);
  CHECK(full.low == doctest::Approx(std::pow(tail, 1.0 / 30.0)).epsilon(1e-12));
}

TEST_CASE("interval contains the point estimate and tightens with n") {
  Interval small = clopper_pearson(50, 100, 0.99);
  Interval big = clopper_pearson(5000, 10000, 0.99);
  CHECK(small.low <= 0.5);
  CHECK(small.high >= 0.5);
  CHECK(big.high - big.low < small.high - small.low);
}

TEST_CASE("invalid arguments rejected") {
  CHECK_THROWS_AS(clopper_pearson(5, 0, 0.99), Error);
  CHECK_THROWS_AS(clopper_pearson(11, 10, 0.99), Error);
  CHECK_THROWS_AS(clopper_pearson(1, 10, 1.5), Error);
  CHECK_THROWS_AS(regularized_incomplete_beta(-1.0, 2.0, 0.5), Error);
}
