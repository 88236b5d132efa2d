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

namespace opforge {

// Regularized incomplete beta I_x(a, b), a,b > 0, x in [0,1]. Continued
// fraction evaluation (modified Lentz), accurate to ~1e-14.
double regularized_incomplete_beta(double a, double b, double x);

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

// Exact (conservative) Clopper-Pearson confidence interval for a binomial
// proportion with `successes` out of `trials` at the given confidence level
// (e.g. 0.99). Endpoints solve the binomial tail equations via the incomplete
// beta identity; k=0 and k=n tails use their closed forms.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                         double level);

}  // namespace opforge
