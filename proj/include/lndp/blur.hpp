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

// Randomized rounding to multiples of a width s, the blur matrix that maps a
// degree distribution to its compressed blurry version, and the
// Wasserstein-infinity distance between pmfs on the integers.

#ifndef LNDP_BLUR_HPP_
#define LNDP_BLUR_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "lndp/errors.hpp"
#include "lndp/random.hpp"

namespace lndp {

// ceil(n / s) + 1.
inline std::size_t blur_rows(std::size_t n, std::size_t s) {
  internal::require(s >= 1, "blur width must be positive");
  return (n + s - 1) / s + 1;
}

// Rounds x to s*floor(x/s) or s*ceil(x/s), choosing the upper value with
// probability equal to the fractional part of x/s. Unbiased.
inline double randomized_round(double x, std::size_t s, Stream& rng) {
  internal::require(s >= 1, "blur width must be positive");
  internal::require(x >= 0.0, "randomized rounding expects x >= 0");
  const double w = static_cast<double>(s);
  const double q = std::floor(x / w);
  const double frac = x / w - q;
  return w * (q + (frac > 0.0 && rng.bernoulli(frac) ? 1.0 : 0.0));
}

inline double randomized_round(double x, std::size_t s, Seed seed) {
  Stream rng(derive_seed(seed, StreamLabel::kRounding));
  return randomized_round(x, s, rng);
}

// The nu x n blur matrix, entry (i, j) = max(1 - |j - s*i| / s, 0). Stored
// implicitly: column j has weight 1 - f at row floor(j/s) and f at the next
// row, where f = (j mod s) / s.
class BlurMatrix {
 public:
  struct Entry {
    std::size_t row;
    double weight;
  };
  struct Column {
    std::array<Entry, 2> entries;
    std::size_t size;
  };

  BlurMatrix(std::size_t n, std::size_t s) : n_(n), s_(s), nu_(blur_rows(n, s)) {
    internal::require(n >= 1, "n must be positive");
  }

  std::size_t n() const { return n_; }
  std::size_t s() const { return s_; }
  std::size_t nu() const { return nu_; }

  Column column(std::size_t j) const {
    internal::require(j < n_, "blur column out of range");
    const std::size_t lo = j / s_;
    const std::size_t rem = j % s_;
    if (rem == 0) return {{{{lo, 1.0}, {lo + 1, 0.0}}}, 1};
    const double f = static_cast<double>(rem) / static_cast<double>(s_);
    return {{{{lo, 1.0 - f}, {lo + 1, f}}}, 2};
  }

  double entry(std::size_t i, std::size_t j) const {
    const double diff = std::abs(static_cast<double>(j) - static_cast<double>(s_ * i));
    return std::max(1.0 - diff / static_cast<double>(s_), 0.0);
  }

  // Dense nu x n form. Only for tests and small n.
  Eigen::MatrixXd dense() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nu_),
                                              static_cast<Eigen::Index>(n_));
    for (std::size_t j = 0; j < n_; ++j) {
      const Column col = column(j);
      for (std::size_t k = 0; k < col.size; ++k) {
        a(static_cast<Eigen::Index>(col.entries[k].row), static_cast<Eigen::Index>(j)) =
            col.entries[k].weight;
      }
    }
    return a;
  }

  // A_s * v for a length-n vector v.
  std::vector<double> apply(const std::vector<double>& v) const {
    internal::require(v.size() == n_, "blur input has wrong length");
    std::vector<double> out(nu_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j] == 0.0) continue;
      const Column col = column(j);
      for (std::size_t k = 0; k < col.size; ++k) {
        out[col.entries[k].row] += col.entries[k].weight * v[j];
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::size_t s_;
  std::size_t nu_;
};

inline BlurMatrix blur_matrix(std::size_t n, std::size_t s) { return BlurMatrix(n, s); }

// Compressed blurry pmf: probs[i] is the mass at degree value s*i.
struct CompressedBlurryPmf {
  std::vector<double> probs;
  std::size_t s = 1;
  std::size_t n = 0;

  // The same distribution on the integer grid {0, ..., s*(nu-1)}.
  std::vector<double> on_integer_grid() const {
    std::vector<double> out(s * (probs.size() - 1) + 1, 0.0);
    for (std::size_t i = 0; i < probs.size(); ++i) out[s * i] = probs[i];
    return out;
  }
};

inline CompressedBlurryPmf compressed_blurry(const std::vector<double>& degree_pmf,
                                             std::size_t s) {
  BlurMatrix a(degree_pmf.size(), s);
  return {a.apply(degree_pmf), s, degree_pmf.size()};
}

// W-infinity distance between pmfs p and q on {0, 1, ...} (index = value),
// via the quantile coupling. Masses below 1e-12 left over from floating-point
// accumulation are ignored.
inline double winf_distance(const std::vector<double>& p, const std::vector<double>& q) {
  constexpr double kTol = 1e-12;
  std::size_t a = 0;
  std::size_t b = 0;
  double rp = p.empty() ? 0.0 : p[0];
  double rq = q.empty() ? 0.0 : q[0];
  double worst = 0.0;
  for (;;) {
    while (a < p.size() && rp <= kTol) {
      if (++a < p.size()) rp = p[a];
    }
    while (b < q.size() && rq <= kTol) {
      if (++b < q.size()) rq = q[b];
    }
    if (a >= p.size() || b >= q.size()) break;
    const double m = std::min(rp, rq);
    worst = std::max(worst, std::abs(static_cast<double>(a) - static_cast<double>(b)));
    rp -= m;
    rq -= m;
  }
  return worst;
}

}  // namespace lndp

#endif  // LNDP_BLUR_HPP_
