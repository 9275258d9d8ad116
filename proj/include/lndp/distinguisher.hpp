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

// Distinguisher between random t-starpartite and random t-regular graphs.
//
// The server publishes s random multisets S_j of about n/t nodes. Node i
// reports, for every j, whether it has a neighbor in S_j, plus Gaussian
// noise. In a regular graph every column mean sits near p_{n,t}; in a
// starpartite graph it sits near t/n or near 1 depending on whether S_j hit
// a center. The fraction of column means landing inside [0, 1] separates
// the two families.

#ifndef LNDP_DISTINGUISHER_HPP_
#define LNDP_DISTINGUISHER_HPP_

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lndp/errors.hpp"
#include "lndp/graph.hpp"
#include "lndp/mechanisms.hpp"
#include "lndp/random.hpp"

namespace lndp {

// Phi(x) for the standard normal.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// Pr[a <= Z <= b] for Z ~ N(mu, sigma^2), evaluated without cancellation in
// either tail.
inline double normal_interval(double a, double b, double mu, double sigma) {
  if (b <= a) return 0.0;
  const double za = (a - mu) / (sigma * std::numbers::sqrt2);
  const double zb = (b - mu) / (sigma * std::numbers::sqrt2);
  if (za >= 0.0) return 0.5 * (std::erfc(za) - std::erfc(zb));
  if (zb <= 0.0) return 0.5 * (std::erfc(-zb) - std::erfc(-za));
  return 0.5 * (std::erf(zb) - std::erf(za));
}

// 1 - (1 - t/n)^(n/t): the chance that a uniform multiset of n/t nodes
// meets a fixed set of t nodes.
inline double p_nt(double n, double t) {
  internal::require(t >= 1.0, "t must be at least 1");
  internal::require(t <= n, "t must not exceed n");
  if (t == n) return 1.0;
  return -std::expm1(n / t * std::log1p(-t / n));
}

struct RegimeProbabilities {
  double p = 0.0;       // p_{n,t}
  double gamma = 0.0;   // 1 / (200 sigma_bar^2), or 0 when that exceeds 1
  double r = 0.0;       // sqrt(3 p / n * ln(1 / gamma)), or 0 likewise
  double p_reg = 0.0;   // Pr[column mean in [0, 1]] for regular inputs
  double p_star = 0.0;  // same for starpartite inputs
  bool idealized = false;
};

// Column-mean acceptance probabilities under the Gaussian model of the
// column means. For sigma_bar < 1/sqrt(200) the slack gamma would exceed 1;
// the regular-side probability then falls back to the noise-only value with
// gamma = r = 0.
inline RegimeProbabilities p_star_p_reg(double n, double t, double sigma_bar) {
  internal::require(sigma_bar > 0.0, "sigma_bar must be positive");
  RegimeProbabilities out;
  out.p = p_nt(n, t);
  const double gamma = 1.0 / (200.0 * sigma_bar * sigma_bar);
  if (gamma < 1.0) {
    out.gamma = gamma;
    out.r = std::sqrt(3.0 * out.p / n * std::log(1.0 / gamma));
  } else {
    out.idealized = true;
  }
  out.p_reg = (1.0 - out.gamma) * normal_interval(out.r, 1.0 - out.r, out.p, sigma_bar);
  out.p_star = (1.0 - out.p) * normal_interval(0.0, 1.0, t / n, sigma_bar) +
               out.p * normal_interval(0.0, 1.0, 1.0, sigma_bar);
  return out;
}

struct DistinguisherParams {
  std::size_t n = 0;
  std::size_t t = 0;
  PrivacyParams privacy;
  double noise_scale = 1.0;

  double c_edp = 0.0;           // sqrt(2 ln(2.5 / delta)) / eps
  std::size_t s = 0;            // ceil(3 t ln(2 / delta)) multisets
  std::size_t set_size = 0;     // floor(n / t)
  double sigma_priv = 0.0;      // per-entry noise, including noise_scale
  double sigma_bar = 0.0;       // sigma_priv / sqrt(n)
  RegimeProbabilities probs;
  double tau = 0.0;             // (p_reg + p_star) / 2
  std::vector<std::string> warnings;

  // Certified private only with unit noise scale and parameters inside the
  // analyzed regime.
  bool certified() const { return noise_scale == 1.0; }

  static DistinguisherParams make(std::size_t n, std::size_t t, const PrivacyParams& privacy,
                                  double noise_scale = 1.0) {
    internal::require(t >= 1, "t must be at least 1");
    internal::require(t <= n, "t must not exceed n");
    internal::require(privacy.delta > 0.0 && privacy.delta < 1.0,
                      "distinguisher needs delta in (0, 1)");
    internal::require(noise_scale > 0.0, "noise scale must be positive");
    DistinguisherParams d;
    d.n = n;
    d.t = t;
    d.privacy = privacy;
    d.noise_scale = noise_scale;
    const double eps = privacy.eps;
    const double delta = privacy.delta;
    const double l2 = std::log(2.0 / delta);
    const double nn = static_cast<double>(n);
    const double tt = static_cast<double>(t);
    d.c_edp = std::sqrt(2.0 * std::log(2.5 / delta)) / eps;
    d.s = static_cast<std::size_t>(std::ceil(3.0 * tt * l2));
    d.set_size = n / t;
    const double ss = static_cast<double>(d.s);
    d.sigma_priv = noise_scale * d.c_edp *
                   std::sqrt(ss + (ss / tt + std::sqrt(3.0 * ss / tt * l2)) * nn);
    d.sigma_bar = d.sigma_priv / std::sqrt(nn);
    d.probs = p_star_p_reg(nn, tt, d.sigma_bar);
    d.tau = 0.5 * (d.probs.p_reg + d.probs.p_star);
    if (!(eps < 0.5)) d.warnings.push_back("eps outside (0, 1/2)");
    if (!(delta < 0.1)) d.warnings.push_back("delta outside (0, 1/10)");
    if (noise_scale != 1.0) d.warnings.push_back("noise scale != 1: output not certified");
    if (d.probs.idealized) d.warnings.push_back("sigma_bar < 1/sqrt(200): idealized threshold");
    return d;
  }
};

enum class GraphFamily { kStarpartite, kRegular };

inline std::string to_string(GraphFamily f) {
  return f == GraphFamily::kStarpartite ? "star" : "regular";
}

// s multisets of `size` nodes each, drawn uniformly with replacement.
inline std::vector<std::vector<NodeId>> publish_multisets(std::size_t n, std::size_t s,
                                                          std::size_t size, Seed seed) {
  Stream rng(derive_seed(seed, StreamLabel::kPublic));
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  std::vector<std::vector<NodeId>> sets(s, std::vector<NodeId>(size));
  for (auto& set : sets) {
    for (auto& x : set) x = pick(rng);
  }
  return sets;
}

// Bit matrix b[i][j] = 1 iff node i has a neighbor in multiset j.
inline std::vector<std::vector<char>> report_bits(const Graph& g,
                                                  const std::vector<std::vector<NodeId>>& sets) {
  std::vector<std::vector<char>> bits(g.n(), std::vector<char>(sets.size(), 0));
  std::vector<char> member(g.n(), 0);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (NodeId x : sets[j]) member[x] = 1;
    for (NodeId i = 0; i < g.n(); ++i) {
      for (NodeId w : g.neighbors(i)) {
        if (member[w]) {
          bits[i][j] = 1;
          break;
        }
      }
    }
    for (NodeId x : sets[j]) member[x] = 0;
  }
  return bits;
}

struct DistinguishResult {
  GraphFamily label = GraphFamily::kStarpartite;
  std::vector<int> y;  // 1 iff column mean j lies in [0, 1]
  double fraction = 0.0;
  double tau = 0.0;
};

inline DistinguishResult distinguish(const Graph& g, const DistinguisherParams& params,
                                     Seed seed) {
  internal::require(g.n() == params.n, "graph size does not match the parameters");
  const auto sets = publish_multisets(params.n, params.s, params.set_size, seed);
  const auto bits = report_bits(g, sets);
  std::vector<double> col_sum(params.s, 0.0);
  for (NodeId i = 0; i < g.n(); ++i) {
    Stream rng(derive_seed(seed, {static_cast<std::uint64_t>(StreamLabel::kNodeNoise), i}));
    std::normal_distribution<double> normal(0.0, params.sigma_priv);
    for (std::size_t j = 0; j < params.s; ++j) col_sum[j] += bits[i][j] + normal(rng);
  }
  DistinguishResult out;
  out.tau = params.tau;
  out.y.resize(params.s);
  std::size_t hits = 0;
  for (std::size_t j = 0; j < params.s; ++j) {
    const double mean = col_sum[j] / static_cast<double>(g.n());
    out.y[j] = mean >= 0.0 && mean <= 1.0 ? 1 : 0;
    hits += static_cast<std::size_t>(out.y[j]);
  }
  out.fraction = params.s == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(params.s);
  out.label = out.fraction >= params.tau ? GraphFamily::kRegular : GraphFamily::kStarpartite;
  return out;
}

struct GapReport {
  double n = 0.0;
  double t = 0.0;
  double s = 0.0;
  double c_edp = 0.0;
  double sigma_bar = 0.0;
  double gamma = 0.0;
  double r = 0.0;
  bool cond_a = false;  // s >= K sigma_bar^6 / 3
  bool cond_b = false;  // sigma_bar >= 1
  bool cond_c = false;  // r <= gamma
  bool cond_d = false;  // n >= 3 t
  double gap = 0.0;     // p_reg - p_star
  double gap_bound = 0.0;  // 1 / (100 sqrt(2 pi) sigma_bar^3)

  bool conditions_hold() const { return cond_a && cond_b && cond_c && cond_d; }
  bool gap_holds() const { return gap >= gap_bound; }
};

// 72 * 10^4 * pi.
inline constexpr double kGapConstant = 72.0e4 * std::numbers::pi;

// Evaluates the parameter conditions and the p_reg - p_star gap at the
// large-n parameter point n = (3/4) K ln^5(2/delta) c^10,
// t = 30 K ln^2(2/delta) c^6, s = 3 t ln(2/delta). t may be overridden.
inline GapReport gap_check(double eps, double delta, std::optional<double> t_override = {}) {
  internal::require(eps > 0.0, "eps must be positive");
  internal::require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  GapReport g;
  const double l2 = std::log(2.0 / delta);
  g.c_edp = std::sqrt(2.0 * std::log(2.5 / delta)) / eps;
  const double c = g.c_edp;
  g.n = 0.75 * kGapConstant * std::pow(l2, 5) * std::pow(c, 10);
  g.t = t_override ? *t_override : 30.0 * kGapConstant * l2 * l2 * std::pow(c, 6);
  g.s = 3.0 * g.t * l2;
  g.sigma_bar = c * std::sqrt(g.s / g.n + g.s / g.t + std::sqrt(3.0 * g.s / g.t * l2));
  g.gamma = 1.0 / (200.0 * g.sigma_bar * g.sigma_bar);
  const double p = p_nt(g.n, std::min(g.t, g.n));
  g.r = g.gamma < 1.0 ? std::sqrt(3.0 * p / g.n * std::log(1.0 / g.gamma)) : 0.0;
  g.cond_a = g.s >= kGapConstant * std::pow(g.sigma_bar, 6) / 3.0;
  g.cond_b = g.sigma_bar >= 1.0;
  g.cond_c = g.r <= g.gamma;
  g.cond_d = g.n >= 3.0 * g.t;
  const RegimeProbabilities probs = p_star_p_reg(g.n, std::min(g.t, g.n), g.sigma_bar);
  g.gap = probs.p_reg - probs.p_star;
  g.gap_bound = 1.0 / (100.0 * std::sqrt(2.0 * std::numbers::pi) * std::pow(g.sigma_bar, 3));
  return g;
}

}  // namespace lndp

#endif  // LNDP_DISTINGUISHER_HPP_
