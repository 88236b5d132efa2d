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
#include <optional>

#include "opforge/graph.hpp"
#include "opforge/rng.hpp"

namespace opforge {

enum class SigmaMethod : std::uint8_t { DenseEigensolve, PowerIterationDeflation };

// sigma is the second-largest absolute eigenvalue of the normalized adjacency
// D^{-1/2} A D^{-1/2}, i.e. max(|lambda_2|, |lambda_n|). Smaller sigma means
// stronger expansion; disconnected graphs legitimately report sigma = 1.
// The signed extremes lambda_2 / lambda_min are filled by the dense path.
struct SpectralReport {
  double sigma = 0.0;
  double gamma = 0.0;  // min_degree / max_degree
  SigmaMethod method = SigmaMethod::DenseEigensolve;
  double residual = 0.0;
  std::uint32_t iterations = 0;
  std::optional<double> lambda2;
  std::optional<double> lambda_min;
};

struct SigmaOptions {
  double tol = 1e-10;
  Node dense_threshold = 2000;  // n above this uses power iteration
  // 0 = max(10*n, 200000). Near-degenerate second eigenvalues converge at a
  // rate set by the relative gap, so the cap must be generous.
  std::uint32_t max_iterations = 0;
};

// Requires every degree positive (the normalization is undefined otherwise).
SpectralReport compute_sigma(const Graph& g, const SigmaOptions& opts = {});

struct MixingAuditResult {
  double max_slack = 0.0;  // max over samples of |e - ss'd/n| - sigma*d*sqrt(ss')
  std::uint64_t samples = 0;
};

// Samples (S, S') pairs by an independent fair coin per node and evaluates the
// regular-graph mixing inequality at the given sigma. The inequality is a
// theorem, so max_slack above numerical noise indicates a bug (or a sigma that
// is not the full second-largest absolute eigenvalue).
MixingAuditResult mixing_lemma_audit(const Graph& g, double sigma,
                                     std::uint64_t sample_count, Rng& rng);

enum class CertVerdict : std::uint8_t { Resilient, Unknown };
enum class CertCondition : std::uint8_t { RegularThm2, IrregularVariant, None };

// One-sided certificate against strong attackers: Unknown does not mean
// vulnerable.
struct ResilienceCertificate {
  CertVerdict verdict = CertVerdict::Unknown;
  CertCondition condition_checked = CertCondition::None;
  double threshold = 0.0;
  double sigma_used = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
};

ResilienceCertificate certify_strong_resilience(const Graph& g, double alpha,
                                                double epsilon,
                                                const SpectralReport& report);

}  // namespace opforge
