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

#include "lndp/distinguisher.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lndp/analysis.hpp"
#include "lndp/errors.hpp"
#include "lndp/graph.hpp"

namespace lndp {
namespace {

using ::testing::DoubleNear;

// Composite Simpson integral of the N(mu, sigma^2) density over [a, b].
double GaussianMass(double a, double b, double mu, double sigma) {
  const int steps = 20000;
  const double h = (b - a) / steps;
  auto f = [&](double x) {
    const double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
  };
  double sum = f(a) + f(b);
  for (int k = 1; k < steps; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return sum * h / 3.0;
}

TEST(PntTest, Examples) {
  EXPECT_EQ(p_nt(100, 100), 1.0);
  EXPECT_THAT(p_nt(100, 10), DoubleNear(0.6513215599, 1e-10));
  EXPECT_THROW(p_nt(100, 0), ParameterError);
}

TEST(PntTest, MonotoneInT) {
  double prev = 0.0;
  for (int t = 1; t <= 100; ++t) {
    const double p = p_nt(100, t);
    EXPECT_GE(p, prev) << t;
    prev = p;
  }
}

TEST(NormalCdfTest, ReferenceValues) {
  EXPECT_EQ(normal_cdf(0.0), 0.5);
  EXPECT_THAT(normal_cdf(1.959963985), DoubleNear(0.975000000026881562, 1e-9));
  // 30-digit reference values.
  const std::vector<std::pair<double, double>> table = {
      {-7.0, 1.27981254388583500438e-12}, {-3.0, 0.00134989803163009452665},
      {-1.0, 0.158655253931457051415},    {0.5, 0.691462461274013103638},
      {1.0, 0.841344746068542948585},     {2.5, 0.993790334674223864833},
      {6.0, 0.999999999013412354962}};
  for (auto [x, phi] : table) EXPECT_THAT(normal_cdf(x), DoubleNear(phi, 1e-12)) << x;
}

TEST(NormalCdfTest, Symmetric) {
  Stream rng(1);
  for (int k = 0; k < 1000; ++k) {
    const double x = 20.0 * (rng.uniform() - 0.5);
    EXPECT_NEAR(normal_cdf(x) + normal_cdf(-x), 1.0, 1e-15);
  }
}

TEST(PStarPRegTest, ProbabilitiesInRange) {
  const RegimeProbabilities r = p_star_p_reg(100, 10, 1e-6);
  EXPECT_GE(r.p_star, 0.0);
  EXPECT_LE(r.p_star, 1.0);
  EXPECT_GE(r.p_reg, 0.0);
  EXPECT_LE(r.p_reg, 1.0);
  for (double sb : {0.08, 0.3, 1.0, 5.0, 40.0}) {
    const RegimeProbabilities q = p_star_p_reg(1000, 10, sb);
    EXPECT_LE(q.p_reg, 1.0 - q.gamma);
    EXPECT_GE(q.p_reg, 0.0);
  }
}

TEST(PStarPRegTest, MatchesQuadrature) {
  for (double sb : {0.3, 1.0, 4.0}) {
    const double n = 1000.0;
    const double t = 20.0;
    const RegimeProbabilities r = p_star_p_reg(n, t, sb);
    const double p = 1.0 - std::pow(1.0 - t / n, n / t);
    const double gamma = 1.0 / (200.0 * sb * sb);
    const double rr = std::sqrt(3.0 * p / n * std::log(1.0 / gamma));
    EXPECT_NEAR(r.p_reg, (1.0 - gamma) * GaussianMass(rr, 1.0 - rr, p, sb), 1e-10);
    EXPECT_NEAR(r.p_star,
                (1.0 - p) * GaussianMass(0, 1, t / n, sb) + p * GaussianMass(0, 1, 1, sb), 1e-10);
  }
}

TEST(DistinguisherParamsTest, HyperparameterFormulas) {
  const PrivacyParams priv(0.4, 0.05);
  const auto d = DistinguisherParams::make(500, 5, priv);
  const double c = std::sqrt(2.0 * std::log(2.5 / 0.05)) / 0.4;
  EXPECT_NEAR(d.c_edp, c, 1e-12);
  EXPECT_EQ(d.s, static_cast<std::size_t>(std::ceil(15.0 * std::log(40.0))));
  EXPECT_EQ(d.set_size, 100u);
  const double s = double(d.s);
  const double sp = c * std::sqrt(s + (s / 5 + std::sqrt(3 * s / 5 * std::log(40.0))) * 500);
  EXPECT_NEAR(d.sigma_priv, sp, 1e-9);
  EXPECT_NEAR(d.sigma_bar, sp / std::sqrt(500.0), 1e-9);
  EXPECT_NEAR(d.tau, 0.5 * (d.probs.p_reg + d.probs.p_star), 1e-15);
  EXPECT_TRUE(d.certified());
  EXPECT_FALSE(DistinguisherParams::make(500, 5, priv, 1e-6).certified());
}

TEST(DistinguishTest, MultisetSizes) {
  const auto sets = publish_multisets(103, 9, 103 / 7, 5);
  ASSERT_EQ(sets.size(), 9u);
  for (const auto& s : sets) EXPECT_EQ(s.size(), 14u);
}

TEST(DistinguishTest, EmptyGraphColumnsFollowNoiseOnlyLaw) {
  const std::size_t n = 500;
  for (double scale : {1.0, 0.03}) {
    const auto params = DistinguisherParams::make(n, 5, PrivacyParams(0.4, 0.05), scale);
    const double p = normal_interval(0.0, 1.0, 0.0, params.sigma_bar);
    double hits = 0.0;
    double cols = 0.0;
    for (Seed seed = 0; seed < 40; ++seed) {
      const DistinguishResult r = distinguish(Graph(n), params, seed);
      for (int y : r.y) hits += y;
      cols += double(r.y.size());
    }
    const double se = std::sqrt(p * (1 - p) / cols);
    EXPECT_NEAR(hits / cols, p, 3.0 * se) << scale;
  }
}

TEST(DistinguishTest, DebugNoiseSeparatesFamilies) {
  const std::size_t n = 500;
  const std::size_t t = 5;
  const auto params = DistinguisherParams::make(n, t, PrivacyParams(0.4, 0.05), 1e-6);
  int star_ok = 0;
  int reg_ok = 0;
  for (Seed trial = 0; trial < 30; ++trial) {
    star_ok += distinguish(generate_starpartite(n, t, trial), params, trial).label ==
               GraphFamily::kStarpartite;
    reg_ok += distinguish(generate_regular(n, t, trial), params, trial).label ==
              GraphFamily::kRegular;
  }
  EXPECT_GE(star_ok, 20);
  EXPECT_GE(reg_ok, 20);
}

TEST(DistinguishTest, Deterministic) {
  const auto params = DistinguisherParams::make(200, 4, PrivacyParams(0.4, 0.05));
  const Graph g = generate_starpartite(200, 4, 1);
  EXPECT_EQ(distinguish(g, params, 9).y, distinguish(g, params, 9).y);
}

TEST(MultisetTest, MultiplicityIsBinomialMean) {
  // n = 12, t = 3, s = 4: X ~ Bin(16, 1/12), mean s / t.
  const std::size_t n = 12;
  const int seeds = 10000;
  std::vector<double> xs;
  for (Seed seed = 0; seed < seeds; ++seed) {
    const auto sets = publish_multisets(n, 4, n / 3, seed);
    double x = 0.0;
    for (const auto& s : sets) x += double(std::count(s.begin(), s.end(), NodeId{0}));
    xs.push_back(x);
  }
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= seeds;
  const double se = std::sqrt(16.0 * (1.0 / 12) * (11.0 / 12) / seeds);
  EXPECT_NEAR(mean, 4.0 / 3.0, 3.0 * se);
}

TEST(MultisetTest, HitProbabilityIsPnt) {
  const std::size_t n = 60;
  const std::size_t t = 5;
  const double p = p_nt(n, t);
  const int trials = 10000;
  const double se = std::sqrt(p * (1 - p) / trials);
  const Graph star = generate_starpartite(n, t, 1);
  const Graph reg = generate_regular(n, t, 2);
  int star_hits = 0;
  int reg_hits = 0;
  for (Seed seed = 0; seed < trials; ++seed) {
    const auto sets = publish_multisets(n, 1, n / t, seed);
    bool center = false;
    for (NodeId x : sets[0]) center = center || star.degree(x) == n - 1;
    star_hits += center;
    bool neighbor = false;
    for (NodeId x : sets[0]) neighbor = neighbor || reg.has_edge(0, x);
    reg_hits += neighbor;
  }
  EXPECT_NEAR(star_hits / double(trials), p, 3.0 * se);
  EXPECT_NEAR(reg_hits / double(trials), p, 3.0 * se);
}

TEST(BitChangeStructureTest, ExhaustiveTwelveNodes) {
  const std::size_t n = 12;
  const std::vector<Graph> bases = {Graph(n), generate_starpartite(n, 3, 1),
                                    generate_regular(n, 3, 2), generate_er(n, 0.5, 3)};
  for (std::size_t b = 0; b < bases.size(); ++b) {
    for (Seed seed = 0; seed < 3; ++seed) {
      const auto sets = publish_multisets(n, 4, n / 3, 100 * b + seed);
      const BitChangeReport r = bit_change_structure(bases[b], sets);
      EXPECT_EQ(r.rewirings, n * 2048u);
      EXPECT_EQ(r.violations, 0u) << b << " " << seed;
    }
  }
}

TEST(GapCheckTest, ParameterPoint) {
  const GapReport r = gap_check(0.4, 0.05);
  EXPECT_TRUE(r.cond_a);
  EXPECT_TRUE(r.cond_b);
  EXPECT_TRUE(r.cond_c);
  EXPECT_TRUE(r.cond_d);
  EXPECT_GE(r.gap, r.gap_bound);
  EXPECT_GT(r.gap_bound, 0.0);
  const double c = std::sqrt(2.0 * std::log(50.0)) / 0.4;
  const double k = 72e4 * std::numbers::pi;
  EXPECT_NEAR(r.n / (0.75 * k * std::pow(std::log(40.0), 5) * std::pow(c, 10)), 1.0, 1e-12);
}

TEST(GapCheckTest, OverriddenTBreaksConditionD) {
  const GapReport base = gap_check(0.4, 0.05);
  const GapReport r = gap_check(0.4, 0.05, base.n / 2.0);
  EXPECT_FALSE(r.cond_d);
}

TEST(GapCheckTest, OtherRegimePoints) {
  for (double eps : {0.1, 0.25, 0.49}) {
    for (double delta : {1e-6, 1e-3, 0.09}) {
      const GapReport r = gap_check(eps, delta);
      EXPECT_TRUE(r.conditions_hold()) << eps << " " << delta;
      EXPECT_GE(r.gap, r.gap_bound) << eps << " " << delta;
    }
  }
}

}  // namespace
}  // namespace lndp
