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

#include "opforge/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace opforge {

namespace {

void require_no_isolated(const Graph& g) {
  for (Node v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) {
      throw Error(ErrorCode::IsolatedNode,
                  "node " + std::to_string(v) + " is isolated");
    }
  }
}

SpectralReport dense_sigma(const Graph& g) {
  const Node n = g.node_count();
  Eigen::MatrixXd normalized = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> inv_sqrt_deg(n);
  for (Node v = 0; v < n; ++v) {
    inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  for (Node v = 0; v < n; ++v) {
    for (Node u : g.neighbors(v)) {
      normalized(v, u) = inv_sqrt_deg[v] * inv_sqrt_deg[u];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "dense eigensolver failed");
  }
  const auto& values = solver.eigenvalues();  // ascending

  SpectralReport report;
  report.method = SigmaMethod::DenseEigensolve;
  report.gamma = static_cast<double>(g.min_degree()) / g.max_degree();
  report.residual = 1e-12 * n;
  report.iterations = 0;
  report.lambda_min = values(0);
  if (n >= 2) {
    report.lambda2 = values(n - 2);
    report.sigma = std::max(std::abs(values(n - 2)), std::abs(values(0)));
  } else {
    report.lambda2 = values(0);
    report.sigma = 0.0;
  }
  report.sigma = std::clamp(report.sigma, 0.0, 1.0 + report.residual);
  return report;
}

SpectralReport power_sigma(const Graph& g, const SigmaOptions& opts) {
  const Node n = g.node_count();
  std::vector<double> inv_sqrt_deg(n);
  std::vector<double> top(n);  // known top eigenpair: value 1, vector D^{1/2}1
  double norm = 0.0;
  for (Node v = 0; v < n; ++v) {
    double d = static_cast<double>(g.degree(v));
    inv_sqrt_deg[v] = 1.0 / std::sqrt(d);
    top[v] = std::sqrt(d);
    norm += d;
  }
  norm = std::sqrt(norm);
  for (Node v = 0; v < n; ++v) top[v] /= norm;

  auto apply_normalized = [&](const std::vector<double>& x,
                              std::vector<double>& y) {
    for (Node v = 0; v < n; ++v) {
      double sum = 0.0;
      for (Node u : g.neighbors(v)) sum += x[u] * inv_sqrt_deg[u];
      y[v] = sum * inv_sqrt_deg[v];
    }
  };
  auto deflate = [&](std::vector<double>& x) {
    double proj = 0.0;
    for (Node v = 0; v < n; ++v) proj += x[v] * top[v];
    for (Node v = 0; v < n; ++v) x[v] -= proj * top[v];
  };

  // Iterate on M^2 where M = N - vv^T: near-bipartite spectra have +/- pairs
  // that defeat plain power iteration, but squaring merges them.
  Rng rng(0x0f0e1d2c3b4a5968ULL);
  std::vector<double> x(n), y(n), z(n);
  for (Node v = 0; v < n; ++v) x[v] = rng.next_double() - 0.5;
  deflate(x);

  auto normalize = [&](std::vector<double>& vec) {
    double s = 0.0;
    for (double value : vec) s += value * value;
    s = std::sqrt(s);
    if (s == 0.0) return false;
    for (double& value : vec) value /= s;
    return true;
  };
  if (!normalize(x)) {
    // Deflation annihilated the start vector (only possible for n == 1).
    SpectralReport report;
    report.method = SigmaMethod::PowerIterationDeflation;
    report.gamma = static_cast<double>(g.min_degree()) / g.max_degree();
    return report;
  }

  const std::uint32_t cap = opts.max_iterations > 0
                                ? opts.max_iterations
                                : std::max<std::uint32_t>(10 * n, 200000);
  double lambda = 0.0;
  double residual = 0.0;
  std::uint32_t iter = 0;
  for (iter = 1; iter <= cap; ++iter) {
    apply_normalized(x, y);
    deflate(y);
    apply_normalized(y, z);
    deflate(z);
    // z = M^2 x; Rayleigh quotient and residual for the squared operator.
    lambda = 0.0;
    for (Node v = 0; v < n; ++v) lambda += x[v] * z[v];
    residual = 0.0;
    for (Node v = 0; v < n; ++v) {
      double r = z[v] - lambda * x[v];
      residual += r * r;
    }
    residual = std::sqrt(residual);
    if (residual <= opts.tol) break;
    if (!normalize(z)) break;  // M^2 x = 0: sigma is exactly 0
    x.swap(z);
  }
  if (iter > cap && residual > opts.tol) {
    throw Error(ErrorCode::NoConvergence,
                "power iteration did not reach tol after " +
                    std::to_string(cap) + " iterations");
  }

  SpectralReport report;
  report.method = SigmaMethod::PowerIterationDeflation;
  report.gamma = static_cast<double>(g.min_degree()) / g.max_degree();
  report.iterations = std::min(iter, cap);
  report.residual = residual;
  report.sigma = std::sqrt(std::max(lambda, 0.0));
  report.sigma = std::clamp(report.sigma, 0.0, 1.0 + report.residual);
  return report;
}

}  // namespace

SpectralReport compute_sigma(const Graph& g, const SigmaOptions& opts) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::InvalidParameters, "empty graph");
  }
  require_no_isolated(g);
  if (g.node_count() <= opts.dense_threshold) return dense_sigma(g);
  return power_sigma(g, opts);
}

MixingAuditResult mixing_lemma_audit(const Graph& g, double sigma,
                                     std::uint64_t sample_count, Rng& rng) {
  if (!g.is_regular() || g.node_count() == 0) {
    throw Error(ErrorCode::NotRegular, "mixing lemma audit needs a regular graph");
  }
  const double d = g.max_degree();
  const double n = g.node_count();
  MixingAuditResult result;
  result.samples = sample_count;
  std::vector<bool> in_s(g.node_count(), false), in_s2(g.node_count(), false);
  std::vector<Node> s_nodes;
  for (std::uint64_t it = 0; it < sample_count; ++it) {
    s_nodes.clear();
    std::uint64_t s_size = 0, s2_size = 0;
    for (Node v = 0; v < g.node_count(); ++v) {
      in_s[v] = rng.fair_coin();
      in_s2[v] = rng.fair_coin();
      if (in_s[v]) {
        s_nodes.push_back(v);
        ++s_size;
      }
      if (in_s2[v]) ++s2_size;
    }
    std::uint64_t crossing = 0;
    for (Node v : s_nodes) {
      for (Node u : g.neighbors(v)) {
        if (in_s2[u]) ++crossing;
      }
    }
    const double expected = static_cast<double>(s_size) * s2_size * d / n;
    const double bound = sigma * d * std::sqrt(static_cast<double>(s_size) *
                                               static_cast<double>(s2_size));
    const double slack = std::abs(static_cast<double>(crossing) - expected) - bound;
    result.max_slack = std::max(result.max_slack, slack);
  }
  return result;
}

ResilienceCertificate certify_strong_resilience(const Graph& g, double alpha,
                                                double epsilon,
                                                const SpectralReport& report) {
  if (alpha <= 0.0 || alpha >= 0.5 || epsilon <= 0.0 || epsilon >= 0.5) {
    throw Error(ErrorCode::InvalidParameters,
                "alpha and epsilon must lie in (0, 1/2)");
  }
  ResilienceCertificate cert;
  cert.sigma_used = report.sigma;
  cert.alpha = alpha;
  cert.epsilon = epsilon;
  const double root = std::sqrt(alpha * (1.0 - alpha));
  if (g.is_regular()) {
    cert.condition_checked = CertCondition::RegularThm2;
    cert.threshold = epsilon * root;
  } else {
    const double gamma = report.gamma;
    cert.condition_checked = CertCondition::IrregularVariant;
    cert.threshold =
        ((1.0 + gamma) * epsilon / 2.0 - (1.0 - gamma) / 4.0) * root;
  }
  if (report.sigma <= cert.threshold + report.residual) {
    cert.verdict = CertVerdict::Resilient;
  } else {
    cert.verdict = CertVerdict::Unknown;
  }
  return cert;
}

}  // namespace opforge
