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

// Statistical distances, privacy accounting, brute-force sensitivity
// oracles and the splicing comparison for degrees-only Gaussian
// randomizers.

#ifndef LNDP_ANALYSIS_HPP_
#define LNDP_ANALYSIS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lndp/distinguisher.hpp"
#include "lndp/errors.hpp"
#include "lndp/graph.hpp"
#include "lndp/mechanisms.hpp"
#include "lndp/random.hpp"

namespace lndp {

// Returned by bhattacharyya when the supports are disjoint.
inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

template <typename Label>
class DiscretePmf {
 public:
  DiscretePmf(std::vector<Label> support, std::vector<double> probs)
      : support_(std::move(support)), probs_(std::move(probs)) {
    internal::require(support_.size() == probs_.size(), "support and probabilities differ in size");
    double total = 0.0;
    for (double p : probs_) {
      internal::require(p >= 0.0, "negative probability");
      total += p;
    }
    internal::require(std::abs(total - 1.0) <= 1e-9, "probabilities do not sum to 1");
  }

  const std::vector<Label>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }

  std::map<Label, double> masses() const {
    std::map<Label, double> m;
    for (std::size_t k = 0; k < support_.size(); ++k) m[support_[k]] += probs_[k];
    return m;
  }

 private:
  std::vector<Label> support_;
  std::vector<double> probs_;
};

// Product distribution on pairs.
template <typename A, typename B>
DiscretePmf<std::pair<A, B>> product(const DiscretePmf<A>& p, const DiscretePmf<B>& q) {
  std::vector<std::pair<A, B>> support;
  std::vector<double> probs;
  for (std::size_t a = 0; a < p.support().size(); ++a) {
    for (std::size_t b = 0; b < q.support().size(); ++b) {
      support.emplace_back(p.support()[a], q.support()[b]);
      probs.push_back(p.probs()[a] * q.probs()[b]);
    }
  }
  return {std::move(support), std::move(probs)};
}

namespace internal {

// Calls f(p_mass, q_mass) over the union of the two supports.
template <typename Label, typename F>
void for_each_joint(const DiscretePmf<Label>& p, const DiscretePmf<Label>& q, F&& f) {
  const auto mp = p.masses();
  const auto mq = q.masses();
  for (const auto& [label, pm] : mp) {
    auto it = mq.find(label);
    f(pm, it == mq.end() ? 0.0 : it->second);
  }
  for (const auto& [label, qm] : mq) {
    if (!mp.contains(label)) f(0.0, qm);
  }
}

}  // namespace internal

template <typename Label>
double tv_distance(const DiscretePmf<Label>& p, const DiscretePmf<Label>& q) {
  double sum = 0.0;
  internal::for_each_joint(p, q, [&](double a, double b) { sum += std::abs(a - b); });
  return 0.5 * sum;
}

// -ln of the Hellinger affinity sum sqrt(p q).
template <typename Label>
double bhattacharyya(const DiscretePmf<Label>& p, const DiscretePmf<Label>& q) {
  double affinity = 0.0;
  internal::for_each_joint(p, q, [&](double a, double b) { affinity += std::sqrt(a * b); });
  if (affinity <= 0.0) return kInfiniteDistance;
  return std::max(0.0, -std::log(affinity));
}

struct GaussianProduct {
  std::vector<double> means;
  double sigma = 1.0;
};

// Sum over coordinates of (mu_a - mu_b)^2 / (8 sigma^2).
inline double bhatt_gaussian_product(const GaussianProduct& a, const GaussianProduct& b) {
  internal::require(a.means.size() == b.means.size(), "Gaussian products differ in dimension");
  internal::require(a.sigma == b.sigma, "Gaussian products must share sigma");
  internal::require(a.sigma > 0.0, "sigma must be positive");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.means.size(); ++k) {
    const double d = a.means[k] - b.means[k];
    sum += d * d;
  }
  return sum / (8.0 * a.sigma * a.sigma);
}

// Upper bound sqrt(2 (1 - exp(-B))) on total variation.
inline double tv_from_bhatt(double b) {
  internal::require(b >= 0.0, "Bhattacharyya distance must be nonnegative");
  if (b == kInfiniteDistance) return std::sqrt(2.0);
  return std::sqrt(2.0 * -std::expm1(-b));
}

// ln cosh(eps / 2) + ln(1 / (1 - delta)): the largest Bhattacharyya distance
// between output distributions of an (eps, delta)-indistinguishable pair.
inline double bhatt_dp_bound(const PrivacyParams& params) {
  internal::require(params.delta < 1.0, "delta must be below 1");
  return std::log(std::cosh(params.eps / 2.0)) - std::log1p(-params.delta);
}

// min(eps^2 / 8, eps / 2) + delta / (1 - delta).
inline double bhatt_dp_simple_bound(const PrivacyParams& params) {
  internal::require(params.delta < 1.0, "delta must be below 1");
  return std::min(params.eps * params.eps / 8.0, params.eps / 2.0) +
         params.delta / (1.0 - params.delta);
}

// (k eps, k e^{k eps} delta); delta is capped at 1.
inline PrivacyParams group_privacy(const PrivacyParams& params, std::size_t k) {
  internal::require(k >= 1, "group size must be at least 1");
  if (k == 1) return params;
  const double kk = static_cast<double>(k);
  return PrivacyParams(kk * params.eps,
                       std::min(1.0, kk * std::exp(kk * params.eps) * params.delta));
}

// 7 k eps^2 / 2 + 2 eps sqrt(6 k ln(2 / delta')).
inline double adv_grouposition_eps(double eps, std::size_t k, double delta_prime) {
  internal::require(eps >= 0.0, "eps must be nonnegative");
  internal::require(delta_prime > 0.0 && delta_prime < 1.0, "delta' must lie in (0, 1)");
  const double kk = static_cast<double>(k);
  return 3.5 * kk * eps * eps + 2.0 * eps * std::sqrt(6.0 * kk * std::log(2.0 / delta_prime));
}

// Graph on n <= 11 nodes from a bitmask over the pairs (i, j), i < j, in
// lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

namespace internal {

// Bit index of pair {i, j} in the mask layout of graph_from_mask.
inline std::size_t pair_bit(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace internal

// Calls f(mask_g, mask_h) for every graph g on n nodes and every graph h
// obtained from g by rewiring a single node (including h = g).
template <typename F>
void for_each_rewiring(std::size_t n, F&& f) {
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t count = std::uint64_t{1} << pairs;
  std::vector<std::uint64_t> star(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) star[i] |= std::uint64_t{1} << internal::pair_bit(n, i, j);
    }
  }
  for (std::uint64_t g = 0; g < count; ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t base = g & ~star[i];
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << (n - 1)); ++sub) {
        std::uint64_t h = base;
        std::size_t k = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          if ((sub >> k) & 1u) h |= std::uint64_t{1} << internal::pair_bit(n, i, j);
          ++k;
        }
        f(g, h);
      }
    }
  }
}

// Exact l2 sensitivity of report_map under single-node rewiring, by
// enumeration of every graph on n <= 6 nodes.
inline double l2_sensitivity_oracle(const std::function<std::vector<double>(const Graph&)>& report_map,
                                    std::size_t n) {
  internal::require(n >= 1, "n must be positive");
  internal::require(n <= 6, "exhaustive sensitivity search is limited to n <= 6");
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::vector<double>> reports(std::size_t{1} << pairs);
  for (std::uint64_t g = 0; g < reports.size(); ++g) reports[g] = report_map(graph_from_mask(n, g));
  double best_sq = 0.0;
  for_each_rewiring(n, [&](std::uint64_t g, std::uint64_t h) {
    const auto& a = reports[g];
    const auto& b = reports[h];
    if (a.size() != b.size()) throw InvariantViolation("report length depends on the graph");
    double sq = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) sq += (a[k] - b[k]) * (a[k] - b[k]);
    best_sq = std::max(best_sq, sq);
  });
  return std::sqrt(best_sq);
}

struct SplicingReport {
  double sigma = 0.0;
  double left_mean = 0.0;   // E over d-regular G of B(R(G), R(empty))
  double left_se = 0.0;
  double right_mean = 0.0;  // E over center sets T of B(R(S_T), R(empty))
  double right_se = 0.0;
  double bound = 0.0;       // right_mean / (1 - d / n)
  double left_expected = 0.0;  // n d^2 / (8 sigma^2)
  double tv_bound = 0.0;    // tv_from_bhatt(left_mean)
  bool holds = false;       // bound - left_mean >= 3 combined standard errors
};

// Compares the Bhattacharyya distance to the empty graph of a random
// d-regular graph with that of a random d-starpartite graph, for the
// randomizer that releases d_i + N(0, sigma^2).
inline SplicingReport splicing_check(std::size_t n, std::size_t d, double sigma,
                                     std::size_t trials, Seed seed) {
  internal::require(2 * d <= n, "splicing check needs d <= n / 2");
  internal::require((n * d) % 2 == 0, "n * d must be even");
  internal::require(trials >= 2, "need at least two trials");
  SplicingReport out;
  out.sigma = sigma;
  const GaussianProduct empty{std::vector<double>(n, 0.0), sigma};
  auto mean_se = [&](const std::vector<double>& xs, double& mean, double& se) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    se = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
  };
  auto distance_to_empty = [&](const Graph& g) {
    GaussianProduct rep{std::vector<double>(n), sigma};
    for (NodeId i = 0; i < n; ++i) rep.means[i] = static_cast<double>(g.degree(i));
    return bhatt_gaussian_product(rep, empty);
  };
  std::vector<double> left(trials);
  std::vector<double> right(trials);
  for (std::size_t k = 0; k < trials; ++k) {
    left[k] = distance_to_empty(generate_regular(n, d, derive_seed(seed, {1, k})));
    right[k] = distance_to_empty(generate_starpartite(n, d, derive_seed(seed, {2, k})));
  }
  mean_se(left, out.left_mean, out.left_se);
  mean_se(right, out.right_mean, out.right_se);
  const double scale = 1.0 / (1.0 - static_cast<double>(d) / static_cast<double>(n));
  out.bound = scale * out.right_mean;
  const double se = std::hypot(out.left_se, scale * out.right_se);
  out.holds = out.bound - out.left_mean >= 3.0 * se;
  const double dd = static_cast<double>(d);
  out.left_expected = static_cast<double>(n) * dd * dd / (8.0 * sigma * sigma);
  out.tv_bound = tv_from_bhatt(out.left_mean);
  return out;
}

struct BitChangeReport {
  std::size_t rewirings = 0;
  std::size_t violations = 0;
  std::size_t max_changed = 0;
};

// For fixed published multisets, rewiring node i changes at most s + n X
// entries of the bit matrix, where X is the multiplicity of i across all
// multisets. Checks every node and every possible new neighborhood.
inline BitChangeReport bit_change_structure(const Graph& g,
                                            const std::vector<std::vector<NodeId>>& sets) {
  const std::size_t n = g.n();
  internal::require(n <= 16, "exhaustive rewiring is limited to n <= 16");
  BitChangeReport out;
  const auto base = report_bits(g, sets);
  for (NodeId i = 0; i < n; ++i) {
    std::size_t mult = 0;
    for (const auto& set : sets) mult += static_cast<std::size_t>(std::count(set.begin(), set.end(), i));
    const std::size_t allowed = sets.size() + n * mult;
    for (std::uint32_t sub = 0; sub < (1u << (n - 1)); ++sub) {
      std::vector<NodeId> nbrs;
      std::size_t k = 0;
      for (NodeId j = 0; j < n; ++j) {
        if (j == i) continue;
        if ((sub >> k) & 1u) nbrs.push_back(j);
        ++k;
      }
      const auto bits = report_bits(rewire_node(g, i, nbrs), sets);
      std::size_t changed = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < sets.size(); ++b) changed += bits[a][b] != base[a][b];
      }
      ++out.rewirings;
      out.max_changed = std::max(out.max_changed, changed);
      if (changed > allowed) ++out.violations;
    }
  }
  return out;
}

}  // namespace lndp

#endif  // LNDP_ANALYSIS_HPP_
