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

// Self-check suite behind the `verify` command: structural invariants,
// sensitivity certificates, closed forms and the parameter-point checks,
// each sized to finish in seconds.

#ifndef LNDP_VERIFY_HPP_
#define LNDP_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lndp/analysis.hpp"
#include "lndp/blur.hpp"
#include "lndp/distinguisher.hpp"
#include "lndp/estimators.hpp"
#include "lndp/graph.hpp"
#include "lndp/linquery.hpp"
#include "lndp/mechanisms.hpp"

namespace lndp {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace internal {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline CheckResult check_blur_columns() {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 50; ++n) {
    for (std::size_t s = 1; s <= 10; ++s) {
      const Matrix a = blur_matrix(n, s).dense();
      worst = std::max(worst, (a.colwise().sum().array() - 1.0).abs().maxCoeff());
    }
  }
  return {"blur_columns_stochastic", worst <= 1e-12, "max |colsum - 1| = " + fmt(worst)};
}

inline CheckResult check_blur_adjacent() {
  double worst_excess = -1.0;
  for (std::size_t n = 2; n <= 200; ++n) {
    for (std::size_t s = 1; s <= 20; ++s) {
      const BlurMatrix a(n, s);
      for (std::size_t d = 0; d + 1 < n; ++d) {
        double l1 = 0.0;
        for (std::size_t i = 0; i < a.nu(); ++i) l1 += std::abs(a.entry(i, d) - a.entry(i, d + 1));
        worst_excess = std::max(worst_excess, l1 - 2.0 / static_cast<double>(s));
      }
    }
  }
  return {"blur_adjacent_l1", worst_excess <= 1e-12,
          "max (l1 - 2/s) = " + fmt(worst_excess)};
}

inline CheckResult check_blur_mean_winf(Seed seed) {
  double mean_err = 0.0;
  double winf_excess = -1.0;
  for (std::size_t k = 0; k < 50; ++k) {
    Stream rng(derive_seed(seed, {7, k}));
    const std::size_t n = 2 + rng() % 99;
    const Graph g = generate_er(n, rng.uniform(), rng());
    const auto pmf = degree_pmf(g);
    for (std::size_t s : {std::size_t{1}, std::size_t{2}, std::size_t{7}}) {
      const auto blurry = compressed_blurry(pmf, s);
      double m1 = 0.0;
      double m2 = 0.0;
      for (std::size_t d = 0; d < n; ++d) m1 += static_cast<double>(d) * pmf[d];
      for (std::size_t i = 0; i < blurry.probs.size(); ++i) {
        m2 += static_cast<double>(s * i) * blurry.probs[i];
      }
      mean_err = std::max(mean_err, std::abs(m1 - m2));
      winf_excess = std::max(
          winf_excess, winf_distance(pmf, blurry.on_integer_grid()) - static_cast<double>(s));
    }
  }
  return {"blur_mean_and_winf", mean_err <= 1e-9 && winf_excess <= 0.0,
          "mean error " + fmt(mean_err) + ", max (W_inf - s) " + fmt(winf_excess)};
}

inline CheckResult check_soft_threshold_sensitivity() {
  const std::size_t n = 5;
  bool ok = true;
  std::string detail;
  for (auto [l, u] : {std::pair{0.0, 3.0}, std::pair{1.0, 4.0}}) {
    const SoftThresholdSpec spec(l, u);
    const double sens = l2_sensitivity_oracle(
        [&](const Graph& g) {
          std::vector<double> r(g.n());
          for (NodeId i = 0; i < g.n(); ++i) r[i] = soft_threshold_value(g.degree(i), spec);
          return r;
        },
        n);
    const double bound = std::sqrt(1.0 + n / ((u - l) * (u - l)));
    ok = ok && sens <= bound + 1e-12;
    detail += "[" + fmt(l) + "," + fmt(u) + "] " + fmt(sens) + " <= " + fmt(bound) + "; ";
  }
  return {"soft_threshold_sensitivity", ok, detail};
}

inline CheckResult check_anslin_sensitivity() {
  const std::size_t n = 5;
  bool ok = true;
  std::string detail;
  for (std::size_t s = 1; s <= 3; ++s) {
    const BlurMatrix blur(n, s);
    const Matrix m = counting_matrix(blur.nu());
    const double sens = l2_sensitivity_oracle(
        [&](const Graph& g) {
          std::vector<double> r;
          for (NodeId i = 0; i < g.n(); ++i) {
            const Vector rep = anslin_node_report(m, blur, g.degree(i));
            r.insert(r.end(), rep.data(), rep.data() + rep.size());
          }
          return r;
        },
        n);
    const double norm = norm_1_to_2(m);
    const double bound = 4.0 * norm * norm * (1.0 + static_cast<double>(n) / (s * s));
    ok = ok && sens * sens <= bound + 1e-9;
    detail += "s=" + std::to_string(s) + " " + fmt(sens * sens) + " <= " + fmt(bound) + "; ";
  }
  return {"anslin_sensitivity_counting", ok, detail};
}

inline CheckResult check_counting_factorization() {
  const std::size_t nu = 64;
  const Factorization f = fact_counting(nu);
  const double bound = std::ceil(std::log2(static_cast<double>(nu))) + 1.0;
  return {"counting_factorization", f.gamma() <= bound,
          "gamma(64) = " + fmt(f.gamma()) + " <= " + fmt(bound)};
}

inline CheckResult check_lrr_closed_form(Seed seed) {
  double worst = 0.0;
  Stream rng(derive_seed(seed, {9}));
  for (int k = 0; k < 100; ++k) {
    const PrivacyParams p(0.01 + 5.0 * rng.uniform(), 0.5 * rng.uniform());
    const auto a = leaky_rr_pmf(0, p);
    const auto b = leaky_rr_pmf(1, p);
    const DiscretePmf<int> pa({0, 1, 2, 3}, {a.begin(), a.end()});
    const DiscretePmf<int> pb({0, 1, 2, 3}, {b.begin(), b.end()});
    const double closed =
        -std::log(2.0 * (1.0 - p.delta) / (std::exp(p.eps / 2) + std::exp(-p.eps / 2)));
    worst = std::max(worst, std::abs(bhattacharyya(pa, pb) - closed));
    worst = std::max(worst, std::abs(bhatt_dp_bound(p) - closed));
  }
  return {"leaky_rr_bhattacharyya", worst <= 1e-12, "max deviation " + fmt(worst)};
}

inline CheckResult check_accounting() {
  const PrivacyParams g = group_privacy(PrivacyParams(0.1, 1e-6), 3);
  const double d1 = std::abs(g.eps - 0.3) + std::abs(g.delta - 3.0 * std::exp(0.3) * 1e-6);
  const double adv = adv_grouposition_eps(0.1, 10, 0.01);
  const double d2 = std::abs(adv - (0.35 + 0.2 * std::sqrt(60.0 * std::log(200.0))));
  return {"privacy_accounting", d1 <= 1e-12 && d2 <= 1e-12,
          "group " + fmt(d1) + ", grouposition " + fmt(d2)};
}

inline CheckResult check_gap() {
  const GapReport r = gap_check(0.4, 0.05);
  return {"distinguisher_gap", r.conditions_hold() && r.gap_holds(),
          "sigma_bar " + fmt(r.sigma_bar) + ", gap " + fmt(r.gap) + " >= " + fmt(r.gap_bound)};
}

inline CheckResult check_splicing(Seed seed) {
  const std::size_t n = 60;
  const double sigma = gaussian_sigma(std::sqrt(2.0), PrivacyParams(0.05, 1e-4));
  const SplicingReport r = splicing_check(n, 2, sigma, 200, seed);
  const bool left_ok = std::abs(r.left_mean - r.left_expected) <= 3.0 * r.left_se + 1e-12;
  return {"splicing_inequality", r.holds && left_ok,
          "E_reg[B] " + fmt(r.left_mean) + " <= " + fmt(r.bound)};
}

inline CheckResult check_noiseless_estimators() {
  const NoiseOptions off{.debug_noiseless = true};
  const PrivacyParams p(1.0, 1e-6);
  const Graph k4 = generate_clique_plus_isolated(4, 4, 1);
  const double e = est_edges(k4, 3, p, 1, off);
  const Graph clique = generate_clique_plus_isolated(400, 200, 2);
  const double k = est_clique(clique, p, 2, off);
  const bool ok = std::abs(e - 6.0) <= 1e-9 && std::abs(k - 200.0) <= 1e-6;
  return {"noiseless_estimators", ok, "K4 edges " + fmt(e) + ", clique " + fmt(k)};
}

}  // namespace internal

inline std::vector<CheckResult> run_verify_suite(Seed seed) {
  using namespace internal;
  std::vector<std::function<CheckResult()>> checks = {
      check_blur_columns,
      check_blur_adjacent,
      [seed] { return check_blur_mean_winf(seed); },
      check_soft_threshold_sensitivity,
      check_anslin_sensitivity,
      check_counting_factorization,
      [seed] { return check_lrr_closed_form(seed); },
      check_accounting,
      check_gap,
      [seed] { return check_splicing(seed); },
      check_noiseless_estimators,
  };
  std::vector<CheckResult> out;
  out.reserve(checks.size());
  for (const auto& c : checks) {
    try {
      out.push_back(c());
    } catch (const std::exception& e) {
      out.push_back({"exception", false, e.what()});
    }
  }
  return out;
}

}  // namespace lndp

#endif  // LNDP_VERIFY_HPP_
