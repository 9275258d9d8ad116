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

#include "lndp/estimators.hpp"

#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lndp/analysis.hpp"
#include "lndp/errors.hpp"
#include "lndp/graph.hpp"

namespace lndp {
namespace {

const PrivacyParams kParams(1.0, 1e-6);
constexpr NoiseOptions kNoiseless{.debug_noiseless = true};

double MeanAndSe(const std::vector<double>& xs, double* se) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / xs.size();
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  *se = std::sqrt(ss / (xs.size() - 1) / xs.size());
  return mean;
}

TEST(SoftThresholdTest, Ramp) {
  const SoftThresholdSpec spec(0.0, 10.0);
  EXPECT_EQ(soft_threshold_value(-1.0, spec), 0.0);
  EXPECT_EQ(soft_threshold_value(5.0, spec), 0.5);
  EXPECT_EQ(soft_threshold_value(11.0, spec), 1.0);
  EXPECT_THROW(SoftThresholdSpec(2.0, 2.0), ParameterError);
}

TEST(EstSoftThresholdTest, NoiselessExamples) {
  const Graph k4 = generate_clique_plus_isolated(4, 4, 0);
  EXPECT_DOUBLE_EQ(est_soft_threshold(k4, SoftThresholdSpec(0, 6), kParams, 1, kNoiseless), 2.0);
  EXPECT_EQ(est_soft_threshold(Graph(7), SoftThresholdSpec(1, 2), kParams, 1, kNoiseless), 0.0);
  EXPECT_THROW(est_soft_threshold(k4, SoftThresholdSpec(0, 6), PrivacyParams(1.0, 0.0), 1),
               CalibrationError);
}

TEST(EstSoftThresholdTest, UnbiasedOverSeeds) {
  const Graph g = generate_er(60, 0.1, 2);
  const SoftThresholdSpec spec(1.0, 8.0);
  const double clean = est_soft_threshold(g, spec, kParams, 0, kNoiseless);
  std::vector<double> xs;
  for (Seed s = 0; s < 500; ++s) xs.push_back(est_soft_threshold(g, spec, kParams, s));
  const double sigma = gaussian_sigma(std::sqrt(1.0 + 60.0 / 49.0), kParams);
  const double se = sigma * std::sqrt(60.0) / std::sqrt(500.0);
  double unused = 0.0;
  EXPECT_NEAR(MeanAndSe(xs, &unused), clean, 4.0 * se);
}

TEST(EstSoftThresholdTest, ReportSensitivityExhaustive) {
  for (auto [l, u] : {std::pair{0.0, 3.0}, std::pair{1.0, 4.0}}) {
    const SoftThresholdSpec spec(l, u);
    const double sens = l2_sensitivity_oracle(
        [&](const Graph& g) {
          std::vector<double> r(g.n());
          for (NodeId i = 0; i < g.n(); ++i) r[i] = soft_threshold_value(g.degree(i), spec);
          return r;
        },
        5);
    EXPECT_LE(sens, std::sqrt(1.0 + 5.0 / ((u - l) * (u - l))) + 1e-12);
  }
}

TEST(EstEdgesTest, NoiselessExamples) {
  const Graph k4 = generate_clique_plus_isolated(4, 4, 0);
  EXPECT_DOUBLE_EQ(est_edges(k4, 3, kParams, 1, kNoiseless), 6.0);
  EXPECT_EQ(est_edges(Graph(9), 4, kParams, 1, kNoiseless), 0.0);
  EXPECT_THROW(est_edges(k4, 0, kParams, 1), ParameterError);
}

TEST(EstEdgesTest, NoiselessExactOnBoundedGraphs) {
  Stream rng(3);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 5 + rng() % 200;
    const std::size_t d = 1 + rng() % (n - 1);
    const Graph g = generate_bounded(n, d, 1.0, rng());
    EXPECT_NEAR(est_edges(g, d, kParams, 1, kNoiseless), double(g.edge_count()), 1e-9);
  }
}

TEST(EstEdgesTest, Deterministic) {
  const Graph g = generate_bounded(300, 10, 1.0, 4);
  EXPECT_EQ(est_edges(g, 10, kParams, 5), est_edges(g, 10, kParams, 5));
}

// Checks (k / n) x_hat + v_hat = average degree when every nonzero degree is
// inside [x_hat, x_hat + 4s], with k = #{i : d_i >= x_hat}.
void ExpectReconstruction(const Graph& g, std::size_t s) {
  const ConcDegResult r = conc_deg(g, kParams, s, 0, kNoiseless);
  double k = 0.0;
  double total = 0.0;
  for (NodeId i = 0; i < g.n(); ++i) {
    const double d = double(g.degree(i));
    total += d;
    if (d >= r.x_hat) k += 1.0;
    if (d > 0) {
      ASSERT_GE(d, r.x_hat);
      ASSERT_LE(d, r.x_hat + 4.0 * s);
    }
  }
  const double n = double(g.n());
  EXPECT_NEAR(k / n * r.x_hat + r.v_hat, total / n, 1e-9);
}

TEST(ConcDegTest, EmptyGraphNoiseless) {
  const std::size_t n = 100;
  const ConcDegResult r = conc_deg(Graph(n), kParams, 10, 0, kNoiseless);
  EXPECT_EQ(r.j_hat, 0u);
  EXPECT_EQ(r.x_hat, -20.0);
  ExpectReconstruction(Graph(n), 10);
}

TEST(ConcDegTest, CliqueNoiseless) {
  for (std::size_t n : {100u, 400u, 1000u, 2500u}) {
    const auto s = static_cast<std::size_t>(std::ceil(std::sqrt(double(n))));
    ExpectReconstruction(generate_clique_plus_isolated(n, n / 2, n), s);
  }
}

TEST(ConcDegTest, RegularGraphsNoiseless) {
  for (std::size_t d : {2u, 3u, 4u, 5u}) {
    ExpectReconstruction(generate_regular(200, d, d), 15);
  }
}

TEST(ConcDegTest, RejectsNarrowWidth) {
  EXPECT_THROW(conc_deg(Graph(100), kParams, 9, 0), ParameterError);
}

TEST(ConcDegTest, ThresholdFormula) {
  const std::size_t n = 1000;
  const std::size_t s = 40;
  const double sigma_coord = 2.0 * std::sqrt((1.0 + double(n) / (s * s)) / n) *
                             std::sqrt(2.0 * std::log(1.25 / 1e-6)) / 1.0;
  const double nu = double(blur_rows(n, s));
  EXPECT_NEAR(conc_deg_threshold(n, s, kParams), sigma_coord * std::sqrt(2.0 * std::log(40.0 * nu)),
              1e-12);
}

TEST(EstErTest, Width) {
  EXPECT_EQ(er_width(16000), static_cast<std::size_t>(
                                 std::ceil(2.0 * std::sqrt(3.0 * 16000 * std::log(160000.0)))));
}

TEST(EstErTest, NoiselessExamples) {
  EXPECT_NEAR(est_er_p(Graph(500), kParams, 1, kNoiseless), 0.0, 1e-9);
  const Graph g = generate_er(2000, 0.3, 5);
  const double avg = 2.0 * g.edge_count() / 2000.0;
  EXPECT_NEAR(est_er_p(g, kParams, 1, kNoiseless), avg / 2000.0, 1e-9);
}

TEST(EstCliqueTest, NoiselessExamples) {
  for (std::size_t n : {64u, 500u, 2000u}) {
    const Graph g = generate_clique_plus_isolated(n, n / 2, 3);
    EXPECT_NEAR(est_clique(g, kParams, 1, kNoiseless), double(n / 2), 1e-6) << n;
  }
  const double k = est_clique(Graph(300), kParams, 1, kNoiseless);
  EXPECT_TRUE(std::isfinite(k));
  EXPECT_GE(k, 0.0);
}

TEST(SmallEpsWarningTest, Threshold) {
  EXPECT_FALSE(small_eps_warning(16000, kParams).has_value());
  EXPECT_TRUE(small_eps_warning(100, PrivacyParams(0.1, 1e-6)).has_value());
}

TEST(BaselineLaplaceTest, NoiselessAndUnbiased) {
  const Graph g = generate_er(80, 0.2, 6);
  const double m = double(g.edge_count());
  EXPECT_EQ(baseline_laplace_edges(g, 1.0, 1, kNoiseless), m);
  std::vector<double> xs;
  for (Seed s = 0; s < 1000; ++s) xs.push_back(baseline_laplace_edges(g, 1.0, s));
  // Sum of n Laplace(2n/eps) has sd sqrt(2n) * 2n / eps; the estimate halves it.
  const double sd = 0.5 * std::sqrt(2.0 * 80) * 160.0;
  double unused = 0.0;
  EXPECT_NEAR(MeanAndSe(xs, &unused), m, 4.0 * sd / std::sqrt(1000.0));
}

TEST(BaselineRrTest, NoiselessAndUnbiased) {
  const Graph g = generate_er(40, 0.3, 7);
  const double m = double(g.edge_count());
  EXPECT_EQ(baseline_rr_edges(g, kParams, 1, kNoiseless), m);
  std::vector<double> xs;
  for (Seed s = 0; s < 1000; ++s) xs.push_back(baseline_rr_edges(g, kParams, s));
  double se = 0.0;
  const double mean = MeanAndSe(xs, &se);
  EXPECT_NEAR(mean, m, 4.0 * se);
}

TEST(BaselineRrTest, DebiasInvertsFlipProbability) {
  // E[b] = a (1 - f) + (1 - a) f with f = 1 / (e^eps + 1); the debiased bit
  // has expectation a.
  const double e = 0.37;
  const double f = 1.0 / (std::exp(e) + 1.0);
  for (int a : {0, 1}) {
    const double eb = a * (1 - f) + (1 - a) * f;
    EXPECT_NEAR((eb * (std::exp(e) + 1) - 1) / (std::exp(e) - 1), a, 1e-12);
  }
  EXPECT_NEAR(rr_bit_eps(2000, kParams), 1.0 / std::sqrt(8.0 * 2000 * std::log(1e6)), 1e-15);
}

}  // namespace
}  // namespace lndp
