// Copyright 2026 The LNDP Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Graph statistics estimated from private per-node reports: soft-threshold
// sums, edge counts, concentrated-degree averages, the Erdos-Renyi edge
// probability and the size of a planted clique. Also the two simple
// baselines for edge counting.

#ifndef LNDP_ESTIMATORS_HPP_
#define LNDP_ESTIMATORS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "lndp/blur.hpp"
#include "lndp/errors.hpp"
#include "lndp/graph.hpp"
#include "lndp/linquery.hpp"
#include "lndp/mechanisms.hpp"
#include "lndp/random.hpp"

namespace lndp {

struct SoftThresholdSpec {
  double lower = 0.0;
  double upper = 1.0;

  SoftThresholdSpec(double l, double u) : lower(l), upper(u) {
    internal::require(l < u, "soft threshold needs lower < upper");
  }
};

// 0 below lower, 1 above upper, linear in between.
inline double soft_threshold_value(double d, const SoftThresholdSpec& spec) {
  if (d <= spec.lower) return 0.0;
  if (d >= spec.upper) return 1.0;
  return (d - spec.lower) / (spec.upper - spec.lower);
}

// Each node releases st(d_i) + N(0, sigma^2) with sigma calibrated to the
// l2-sensitivity sqrt(1 + n / (u - l)^2) of the report vector; the server
// sums.
inline double est_soft_threshold(const Graph& g, const SoftThresholdSpec& spec,
                                 const PrivacyParams& params, Seed seed,
                                 NoiseOptions options = {}) {
  const double width = spec.upper - spec.lower;
  const double sens = std::sqrt(1.0 + static_cast<double>(g.n()) / (width * width));
  const double sigma = gaussian_sigma(sens, params);
  double total = 0.0;
  for (NodeId i = 0; i < g.n(); ++i) {
    double y = soft_threshold_value(static_cast<double>(g.degree(i)), spec);
    if (!options.debug_noiseless) {
      Stream rng(derive_seed(seed, {static_cast<std::uint64_t>(StreamLabel::kNodeNoise), i}));
      y += draw_gaussian(rng, sigma);
    }
    total += y;
  }
  return total;
}

// Edge count of a graph with degrees at most max_deg. With u = max(D, sqrt n)
// the soft-threshold sum over [0, u] is 2m / u.
inline double est_edges(const Graph& g, std::size_t max_deg, const PrivacyParams& params,
                        Seed seed, NoiseOptions options = {}) {
  internal::require(max_deg >= 1, "degree bound must be at least 1");
  const double u =
      std::max(static_cast<double>(max_deg), std::sqrt(static_cast<double>(g.n())));
  return est_soft_threshold(g, SoftThresholdSpec(0.0, u), params, seed, options) * u / 2.0;
}

struct ConcDegResult {
  double x_hat = 0.0;
  double v_hat = 0.0;
  std::size_t j_hat = 0;
  double threshold = 0.0;
};

// Standard deviation of one coordinate of the averaged identity-workload
// estimate.
inline double pmf_coordinate_sigma(std::size_t n, std::size_t s, const PrivacyParams& params) {
  return anslin_sigma(1.0, n, s, params) / std::sqrt(static_cast<double>(n));
}

// Detection threshold for the concentrated-degree window: a union bound over
// nu Gaussian coordinates at failure probability 1/20.
inline double conc_deg_threshold(std::size_t n, std::size_t s, const PrivacyParams& params) {
  const double nu = static_cast<double>(blur_rows(n, s));
  return pmf_coordinate_sigma(n, s, params) * std::sqrt(2.0 * std::log(40.0 * nu));
}

// Locates the bulk of the nonzero degrees on the blurry pmf and returns an
// anchor x_hat with a mass-weighted offset v_hat. When every nonzero degree
// lies in [x_hat, x_hat + 4s] and k nodes have degree >= x_hat,
// (k / n) * x_hat + v_hat is the average degree up to noise.
inline ConcDegResult conc_deg(const Graph& g, const PrivacyParams& params, std::size_t s,
                              Seed seed, NoiseOptions options = {}) {
  const std::size_t n = g.n();
  const auto min_s = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  if (s < min_s) {
    throw ParameterError("blur width " + std::to_string(s) + " is below ceil(sqrt(n)) = " +
                         std::to_string(min_s));
  }
  const Vector v = pmf_estimate(g, params, s, seed, options);
  const auto nu = static_cast<std::ptrdiff_t>(v.size());
  ConcDegResult out;
  out.threshold = options.debug_noiseless ? 0.0 : conc_deg_threshold(n, s, params);
  std::ptrdiff_t best = 1;
  for (std::ptrdiff_t j = 2; j < nu; ++j) {
    if (v(j) > v(best)) best = j;
  }
  const std::ptrdiff_t j_hat = v(best) > out.threshold ? best : 0;
  auto at = [&](std::ptrdiff_t j) { return j < 0 || j >= nu ? 0.0 : v(j); };
  const double w = static_cast<double>(s);
  out.j_hat = static_cast<std::size_t>(j_hat);
  out.x_hat = w * static_cast<double>(j_hat - 2);
  for (std::ptrdiff_t i = 1; i <= 4; ++i) {
    out.v_hat += static_cast<double>(i) * w * at(j_hat - 2 + i);
  }
  return out;
}

// Width used for the Erdos-Renyi estimator: ceil(2 sqrt(3 n ln(10 n))).
inline std::size_t er_width(std::size_t n) {
  const double nn = static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(2.0 * std::sqrt(3.0 * nn * std::log(10.0 * nn))));
}

// Edge probability of G(n, p): average degree over n.
inline double est_er_p(const Graph& g, const PrivacyParams& params, Seed seed,
                       NoiseOptions options = {}) {
  const ConcDegResult r = conc_deg(g, params, er_width(g.n()), seed, options);
  return (r.x_hat + r.v_hat) / static_cast<double>(g.n());
}

// Size of a single planted clique: the positive root of
// k (k - 1) / n = (k / n) x_hat + v_hat.
inline double est_clique(const Graph& g, const PrivacyParams& params, Seed seed,
                         NoiseOptions options = {}) {
  const double n = static_cast<double>(g.n());
  const auto s = static_cast<std::size_t>(std::ceil(std::sqrt(n)));
  const ConcDegResult r = conc_deg(g, params, s, seed, options);
  const double half = (r.x_hat + 1.0) / 2.0;
  return half + std::sqrt(std::max(0.0, half * half + n * r.v_hat));
}

// Warning text when eps is below sqrt(ln n * ln(1/delta) / n), the regime in
// which the concentrated-degree estimators lose their guarantees.
inline std::optional<std::string> small_eps_warning(std::size_t n, const PrivacyParams& params) {
  const double floor_eps =
      std::sqrt(std::log(static_cast<double>(n)) * std::log(1.0 / params.delta) /
                static_cast<double>(n));
  if (params.eps >= floor_eps) return std::nullopt;
  return "eps = " + std::to_string(params.eps) + " is below sqrt(ln n ln(1/delta) / n) = " +
         std::to_string(floor_eps) + "; accuracy guarantees do not apply";
}

// Each node releases d_i + Lap(2n / eps); the estimate is half the sum.
inline double baseline_laplace_edges(const Graph& g, double eps, Seed seed,
                                     NoiseOptions options = {}) {
  const double b = laplace_scale(2.0 * static_cast<double>(g.n()), eps);
  double total = 0.0;
  for (NodeId i = 0; i < g.n(); ++i) {
    double y = static_cast<double>(g.degree(i));
    if (!options.debug_noiseless) {
      Stream rng(derive_seed(seed, {static_cast<std::uint64_t>(StreamLabel::kNodeNoise), i}));
      y += draw_laplace(rng, b);
    }
    total += y;
  }
  return total / 2.0;
}

// Per-bit budget of the randomized-response baseline: eps / sqrt(8 n ln(1/delta)).
inline double rr_bit_eps(std::size_t n, const PrivacyParams& params) {
  return params.eps / std::sqrt(8.0 * static_cast<double>(n) * std::log(1.0 / params.delta));
}

// Node i randomizes each adjacency bit a_{ij}, j > i, and the server sums
// the debiased bits.
inline double baseline_rr_edges(const Graph& g, const PrivacyParams& params, Seed seed,
                                NoiseOptions options = {}) {
  internal::require(params.delta > 0.0 && params.delta < 1.0,
                    "randomized-response baseline needs delta in (0, 1)");
  const double e = rr_bit_eps(g.n(), params);
  const double flip = 1.0 / (1.0 + std::exp(e));
  double ones = 0.0;
  double pairs = 0.0;
  for (NodeId i = 0; i < g.n(); ++i) {
    auto nb = g.neighbors(i);
    auto it = std::upper_bound(nb.begin(), nb.end(), i);
    Stream rng(derive_seed(seed, {static_cast<std::uint64_t>(StreamLabel::kNodeNoise), i}));
    for (NodeId j = i + 1; j < g.n(); ++j) {
      int bit = 0;
      if (it != nb.end() && *it == j) {
        bit = 1;
        ++it;
      }
      if (!options.debug_noiseless && rng.bernoulli(flip)) bit = 1 - bit;
      ones += bit;
    }
    pairs += static_cast<double>(g.n() - 1 - i);
  }
  if (options.debug_noiseless) return ones;
  const double em1 = std::expm1(e);
  return (ones * (em1 + 2.0) - pairs) / em1;
}

}  // namespace lndp

#endif  // LNDP_ESTIMATORS_HPP_
