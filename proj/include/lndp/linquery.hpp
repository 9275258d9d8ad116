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

// Private linear queries on the compressed blurry degree distribution, and
// the factorization mechanism built on top of them.
//
// Each node i holds only its degree d_i. It reports M * A_s * e_{d_i} plus
// spherical Gaussian noise; the server averages the reports. Because A_s
// has at most two nonzeros per column, a report touches at most two columns
// of M.

#ifndef LNDP_LINQUERY_HPP_
#define LNDP_LINQUERY_HPP_

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "lndp/blur.hpp"
#include "lndp/errors.hpp"
#include "lndp/graph.hpp"
#include "lndp/mechanisms.hpp"
#include "lndp/random.hpp"

namespace lndp {

using Matrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double>;
using Vector = Eigen::VectorXd;

// Largest column l2 norm.
inline double norm_1_to_2(const Matrix& m) {
  return m.cols() == 0 ? 0.0 : m.colwise().norm().maxCoeff();
}

inline double norm_1_to_2(const SparseMatrix& m) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    double sq = 0.0;
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) sq += it.value() * it.value();
    best = std::max(best, sq);
  }
  return std::sqrt(best);
}

// Largest row l2 norm.
inline double norm_2_to_inf(const Matrix& m) {
  return m.rows() == 0 ? 0.0 : m.rowwise().norm().maxCoeff();
}

inline double norm_2_to_inf(const SparseMatrix& m) {
  Vector sq = Vector::Zero(m.rows());
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) sq(it.row()) += it.value() * it.value();
  }
  return m.rows() == 0 ? 0.0 : std::sqrt(sq.maxCoeff());
}

// Lower-triangular all-ones matrix: row k sums entries 0..k.
inline Matrix counting_matrix(std::size_t nu) {
  const auto k = static_cast<Eigen::Index>(nu);
  return Matrix::Ones(k, k).triangularView<Eigen::Lower>();
}

inline SparseMatrix sparse_identity(std::size_t nu) {
  SparseMatrix id(static_cast<Eigen::Index>(nu), static_cast<Eigen::Index>(nu));
  id.setIdentity();
  return id;
}

// Per-node, per-coordinate noise standard deviation for a workload with
// column norm `norm12`: the Gaussian mechanism at l2-sensitivity
// 2 * norm12 * sqrt(1 + n / s^2).
inline double anslin_sigma(double norm12, std::size_t n, std::size_t s,
                           const PrivacyParams& params) {
  const double ratio = static_cast<double>(n) / (static_cast<double>(s) * s);
  return gaussian_sigma(2.0 * norm12 * std::sqrt(1.0 + ratio), params);
}

// Noiseless report M * A_s * e_d of a node with degree d.
template <typename Mat>
Vector anslin_node_report(const Mat& m, const BlurMatrix& blur, std::size_t d) {
  Vector r = Vector::Zero(m.rows());
  const BlurMatrix::Column col = blur.column(d);
  for (std::size_t k = 0; k < col.size; ++k) {
    r += col.entries[k].weight * m.col(static_cast<Eigen::Index>(col.entries[k].row));
  }
  return r;
}

// Private estimate of M * D-hat for graph g, where D-hat is the compressed
// blurry degree distribution at width s.
template <typename Mat>
Vector anslin(const Graph& g, const Mat& m, const PrivacyParams& params, std::size_t s,
              Seed seed, NoiseOptions options = {}) {
  const std::size_t n = g.n();
  const BlurMatrix blur(n, s);
  if (static_cast<std::size_t>(m.cols()) != blur.nu()) {
    throw ParameterError("workload has " + std::to_string(m.cols()) + " columns, expected " +
                         std::to_string(blur.nu()));
  }
  const double sigma = anslin_sigma(norm_1_to_2(m), n, s, params);
  const Eigen::Index k = m.rows();
  Vector total = Vector::Zero(k);
  Vector noise(k);
  for (NodeId i = 0; i < n; ++i) {
    const BlurMatrix::Column col = blur.column(g.degree(i));
    for (std::size_t e = 0; e < col.size; ++e) {
      total += col.entries[e].weight * m.col(static_cast<Eigen::Index>(col.entries[e].row));
    }
    if (options.debug_noiseless || sigma == 0.0) continue;
    Stream rng(derive_seed(seed, {static_cast<std::uint64_t>(StreamLabel::kNodeNoise), i}));
    std::normal_distribution<double> normal(0.0, sigma);
    for (Eigen::Index c = 0; c < k; ++c) noise(c) = normal(rng);
    total += noise;
  }
  return total / static_cast<double>(n);
}

// An exact factorization W = L * R. R is the matrix answered privately; L is
// post-processing.
class Factorization {
 public:
  // Checks that L * R reproduces `target` within 1e-9 entrywise.
  static Factorization create(Matrix l, SparseMatrix r, const Matrix& target) {
    internal::require(l.cols() == r.rows(), "factor dimensions do not chain");
    internal::require(l.rows() == target.rows() && r.cols() == target.cols(),
                      "factorization does not match the target shape");
    const Matrix product = l * r;
    const double err = (product - target).cwiseAbs().maxCoeff();
    if (!(err <= 1e-9)) {
      throw ParameterError("L * R differs from the target by " + std::to_string(err) +
                           "; only exact factorizations are supported");
    }
    return Factorization(std::move(l), std::move(r));
  }

  const Matrix& l() const { return l_; }
  const SparseMatrix& r() const { return r_; }

  // ||L||_{2->inf} * ||R||_{1->2}.
  double gamma() const { return norm_2_to_inf(l_) * norm_1_to_2(r_); }

 private:
  Factorization(Matrix l, SparseMatrix r) : l_(std::move(l)), r_(std::move(r)) {}

  Matrix l_;
  SparseMatrix r_;
};

// Balanced binary tree over the index range [0, nu). Node 0 is the root and
// nodes are numbered in preorder.
class IntervalTree {
 public:
  struct Node {
    std::size_t lo;
    std::size_t hi;  // exclusive
    std::ptrdiff_t left = -1;
    std::ptrdiff_t right = -1;
  };

  explicit IntervalTree(std::size_t nu) : nu_(nu) {
    internal::require(nu >= 1, "tree needs at least one leaf");
    nodes_.reserve(2 * nu - 1);
    build(0, nu);
  }

  std::size_t leaves() const { return nu_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t v) const { return nodes_[v]; }

  // R: one row per tree node, the indicator of its interval.
  SparseMatrix interval_matrix() const {
    std::vector<Eigen::Triplet<double>> trips;
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      for (std::size_t j = nodes_[v].lo; j < nodes_[v].hi; ++j) {
        trips.emplace_back(static_cast<int>(v), static_cast<int>(j), 1.0);
      }
    }
    SparseMatrix r(static_cast<Eigen::Index>(nodes_.size()), static_cast<Eigen::Index>(nu_));
    r.setFromTriplets(trips.begin(), trips.end());
    return r;
  }

  // Canonical nodes whose intervals partition [0, k].
  std::vector<std::size_t> prefix_cover(std::size_t k) const {
    std::vector<std::size_t> out;
    cover(0, k, out);
    return out;
  }

  // Least-squares leaf values given one noisy observation per tree node with
  // equal variances. Two passes: bottom-up inverse-variance pooling of each
  // subtree, then top-down redistribution of each parent's residual in
  // proportion to the children's variances.
  Vector least_squares_leaves(const Vector& y) const {
    const std::size_t m = nodes_.size();
    std::vector<double> z(m);
    std::vector<double> var(m);
    for (std::size_t v = m; v-- > 0;) {
      const Node& nd = nodes_[v];
      if (nd.left < 0) {
        z[v] = y(static_cast<Eigen::Index>(v));
        var[v] = 1.0;
        continue;
      }
      const double child_var = var[nd.left] + var[nd.right];
      z[v] = (child_var * y(static_cast<Eigen::Index>(v)) + z[nd.left] + z[nd.right]) /
             (child_var + 1.0);
      var[v] = child_var / (child_var + 1.0);
    }
    std::vector<double> zhat(m);
    zhat[0] = z[0];
    Vector leaves(static_cast<Eigen::Index>(nu_));
    for (std::size_t v = 0; v < m; ++v) {
      const Node& nd = nodes_[v];
      if (nd.left < 0) {
        leaves(static_cast<Eigen::Index>(nd.lo)) = zhat[v];
        continue;
      }
      const double child_var = var[nd.left] + var[nd.right];
      const double resid = zhat[v] - z[nd.left] - z[nd.right];
      zhat[nd.left] = z[nd.left] + var[nd.left] / child_var * resid;
      zhat[nd.right] = z[nd.right] + var[nd.right] / child_var * resid;
    }
    return leaves;
  }

 private:
  std::size_t build(std::size_t lo, std::size_t hi) {
    const std::size_t id = nodes_.size();
    nodes_.push_back({lo, hi});
    if (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      const std::size_t l = build(lo, mid);
      const std::size_t r = build(mid, hi);
      nodes_[id].left = static_cast<std::ptrdiff_t>(l);
      nodes_[id].right = static_cast<std::ptrdiff_t>(r);
    }
    return id;
  }

  void cover(std::size_t v, std::size_t k, std::vector<std::size_t>& out) const {
    const Node& nd = nodes_[v];
    if (nd.lo > k) return;
    if (nd.hi - 1 <= k) {
      out.push_back(v);
      return;
    }
    cover(static_cast<std::size_t>(nd.left), k, out);
    cover(static_cast<std::size_t>(nd.right), k, out);
  }

  std::size_t nu_;
  std::vector<Node> nodes_;
};

enum class CountingDecoder {
  // L = M_count * R^+, the least-squares decoder.
  kLeastSquares,
  // Row k of L adds the canonical intervals covering [0, k].
  kSelection,
};

// Factorization of the nu x nu counting matrix through the 2*nu - 1 dyadic
// intervals of a balanced binary tree.
inline Factorization fact_counting(std::size_t nu,
                                   CountingDecoder decoder = CountingDecoder::kLeastSquares) {
  const IntervalTree tree(nu);
  const auto n_nodes = static_cast<Eigen::Index>(tree.size());
  const auto k = static_cast<Eigen::Index>(nu);
  Matrix l = Matrix::Zero(k, n_nodes);
  if (decoder == CountingDecoder::kSelection) {
    for (std::size_t row = 0; row < nu; ++row) {
      for (std::size_t v : tree.prefix_cover(row)) {
        l(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(v)) = 1.0;
      }
    }
  } else {
    Vector unit = Vector::Zero(n_nodes);
    for (Eigen::Index v = 0; v < n_nodes; ++v) {
      unit(v) = 1.0;
      Vector leaves = tree.least_squares_leaves(unit);
      unit(v) = 0.0;
      double run = 0.0;
      for (Eigen::Index row = 0; row < k; ++row) {
        run += leaves(row);
        l(row, v) = run;
      }
    }
  }
  return Factorization::create(std::move(l), tree.interval_matrix(), counting_matrix(nu));
}

// L * anslin(R).
inline Vector factmech(const Graph& g, const Factorization& f, const PrivacyParams& params,
                       std::size_t s, Seed seed, NoiseOptions options = {}) {
  return f.l() * anslin(g, f.r(), params, s, seed, options);
}

// Private compressed blurry pmf (identity workload).
inline Vector pmf_estimate(const Graph& g, const PrivacyParams& params, std::size_t s,
                           Seed seed, NoiseOptions options = {}) {
  return anslin(g, sparse_identity(blur_rows(g.n(), s)), params, s, seed, options);
}

// Private CDF of the compressed blurry pmf via the tree factorization.
inline Vector cdf_estimate(const Graph& g, const PrivacyParams& params, std::size_t s,
                           Seed seed, NoiseOptions options = {}) {
  return factmech(g, fact_counting(blur_rows(g.n(), s)), params, s, seed, options);
}

}  // namespace lndp

#endif  // LNDP_LINQUERY_HPP_
