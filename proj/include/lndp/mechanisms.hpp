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

// Differential-privacy primitives: calibration formulas and seeded samplers
// for the Gaussian, Laplace, randomized-response and leaky
// randomized-response mechanisms.

#ifndef LNDP_MECHANISMS_HPP_
#define LNDP_MECHANISMS_HPP_

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "lndp/errors.hpp"
#include "lndp/random.hpp"

namespace lndp {

struct PrivacyParams {
  double eps = 1.0;
  double delta = 0.0;

  PrivacyParams() = default;
  PrivacyParams(double eps_in, double delta_in) : eps(eps_in), delta(delta_in) {
    internal::require(std::isfinite(eps) && eps > 0.0, "eps must be positive");
    internal::require(delta >= 0.0 && delta <= 1.0, "delta must lie in [0, 1]");
  }

  // sqrt(ln(1/delta)) / eps.
  double c() const { return std::sqrt(std::log(1.0 / delta)) / eps; }

  friend bool operator==(const PrivacyParams&, const PrivacyParams&) = default;
};

// Shared by every randomized estimator.
struct NoiseOptions {
  // Non-private: drops the noise entirely.
  bool debug_noiseless = false;
};

enum class NoiseKind { kGaussian, kLaplace };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::kGaussian;
  double scale = 1.0;  // standard deviation, or the Laplace scale b

  NoiseSpec(NoiseKind k, double s) : kind(k), scale(s) {
    internal::require(s > 0.0, "noise scale must be positive");
  }
};

// Standard deviation of the Gaussian mechanism with l2-sensitivity delta2.
inline double gaussian_sigma(double delta2, const PrivacyParams& params) {
  internal::require(delta2 >= 0.0, "sensitivity must be nonnegative");
  if (params.delta <= 0.0) {
    throw CalibrationError("the Gaussian mechanism needs delta > 0");
  }
  if (params.delta >= 1.0) {
    throw CalibrationError("the Gaussian mechanism needs delta < 1");
  }
  return delta2 * std::sqrt(2.0 * std::log(1.25 / params.delta)) / params.eps;
}

// Scale b of the Laplace mechanism with l1-sensitivity delta1.
inline double laplace_scale(double delta1, double eps) {
  internal::require(delta1 >= 0.0, "sensitivity must be nonnegative");
  internal::require(eps > 0.0, "eps must be positive");
  return delta1 / eps;
}

inline double draw_gaussian(Stream& rng, double sigma) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return sigma * dist(rng);
}

inline double draw_laplace(Stream& rng, double b) {
  // Inverse CDF on u in (-1/2, 1/2).
  double u = rng.uniform() - 0.5;
  while (u == -0.5) u = rng.uniform() - 0.5;
  return -b * std::copysign(std::log1p(-2.0 * std::abs(u)), u);
}

inline double draw_noise(Stream& rng, const NoiseSpec& spec) {
  return spec.kind == NoiseKind::kGaussian ? draw_gaussian(rng, spec.scale)
                                           : draw_laplace(rng, spec.scale);
}

inline std::vector<double> sample_noise(const NoiseSpec& spec, std::size_t count, Seed seed) {
  Stream rng(derive_seed(seed, StreamLabel::kNodeNoise));
  std::vector<double> out(count);
  std::normal_distribution<double> normal(0.0, spec.scale);
  for (auto& x : out) {
    x = spec.kind == NoiseKind::kGaussian ? normal(rng) : draw_laplace(rng, spec.scale);
  }
  return out;
}

// Keeps b with probability e^eps / (e^eps + 1).
inline int randomized_response(int b, double eps, Stream& rng) {
  internal::require(b == 0 || b == 1, "randomized response takes a bit");
  internal::require(eps >= 0.0, "eps must be nonnegative");
  const double flip = 1.0 / (1.0 + std::exp(eps));
  return rng.bernoulli(flip) ? 1 - b : b;
}

inline int randomized_response(int b, double eps, Seed seed) {
  Stream rng(seed);
  return randomized_response(b, eps, rng);
}

// Output distribution over {0, 1, 2, 3} of leaky randomized response on bit
// b: with probability delta the bit is leaked as 2 + b, otherwise ordinary
// randomized response is applied.
inline std::array<double, 4> leaky_rr_pmf(int b, const PrivacyParams& params) {
  internal::require(b == 0 || b == 1, "leaky randomized response takes a bit");
  const double alpha = 1.0 - params.delta;
  const double other = alpha / (1.0 + std::exp(params.eps));
  const double same = alpha - other;
  if (b == 0) return {same, other, params.delta, 0.0};
  return {other, same, 0.0, params.delta};
}

}  // namespace lndp

#endif  // LNDP_MECHANISMS_HPP_
