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

#include "lndp/graph.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lndp/errors.hpp"

namespace lndp {
namespace {

std::vector<NodeId> Neighbors(const Graph& g, NodeId i) {
  auto nb = g.neighbors(i);
  return {nb.begin(), nb.end()};
}

using ::testing::ElementsAre;
using ::testing::Each;

Graph Path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

TEST(GraphTest, FromEdgesNormalizes) {
  Graph g = Graph::from_edges(4, {{2, 0}, {0, 2}, {3, 1}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THAT(Neighbors(g, 0), ElementsAre(2));
  EXPECT_THAT(Neighbors(g, 1), ElementsAre(3));
  EXPECT_NO_THROW(g.check_invariants());
}

TEST(GraphTest, RejectsSelfLoopsAndBadIds) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), ParameterError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), ParameterError);
}

TEST(GenerateErTest, Extremes) {
  EXPECT_EQ(generate_er(10, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(generate_er(10, 1.0, 1).edge_count(), 45u);
  EXPECT_THROW(generate_er(10, 1.5, 1), ParameterError);
  EXPECT_THROW(generate_er(10, -0.1, 1), ParameterError);
}

TEST(GenerateErTest, EdgeCountConcentrates) {
  const double pairs = 1000.0 * 999.0 / 2.0;
  const double mean = pairs * 0.01;
  const double band = 3.0 * std::sqrt(pairs * 0.01 * 0.99);
  int inside = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    const double m = static_cast<double>(generate_er(1000, 0.01, s).edge_count());
    inside += std::abs(m - mean) <= band;
  }
  EXPECT_GE(inside, 198);
}

TEST(GenerateErTest, EachPairHasProbabilityP) {
  const std::size_t n = 6;
  const double p = 0.3;
  const int seeds = 20000;
  std::vector<int> hits(n * n, 0);
  for (int s = 0; s < seeds; ++s) {
    const Graph g = generate_er(n, p, s);
    for (const auto& [a, b] : g.edges()) ++hits[a * n + b];
  }
  const double se = std::sqrt(p * (1 - p) / seeds);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      EXPECT_NEAR(hits[a * n + b] / static_cast<double>(seeds), p, 4.5 * se) << a << "," << b;
    }
  }
}

TEST(GenerateRegularTest, Examples) {
  const Graph k4 = generate_regular(4, 3, 3);
  EXPECT_EQ(k4.edge_count(), 6u);
  EXPECT_EQ(generate_regular(100, 0, 3).edge_count(), 0u);
  for (int seed = 0; seed < 20; ++seed) {
    EXPECT_THAT(generate_regular(50, 2, seed).degrees(), Each(2u));
  }
}

TEST(GenerateRegularTest, RejectsInfeasible) {
  EXPECT_THROW(generate_regular(5, 3, 1), ParameterError);
  EXPECT_THROW(generate_regular(5, 5, 1), ParameterError);
}

TEST(GenerateStarpartiteTest, MatchesDefinition) {
  const Graph g = generate_starpartite(8, 3, 17);
  EXPECT_EQ(g.edge_count(), 18u);
  std::set<NodeId> centers;
  for (NodeId i = 0; i < 8; ++i) {
    if (g.degree(i) == 7) centers.insert(i);
    else EXPECT_EQ(g.degree(i), 3u);
  }
  ASSERT_EQ(centers.size(), 3u);
  // Independent enumeration of {{i, j} : i in T, j != i}.
  std::set<Edge> expected;
  for (NodeId c : centers) {
    for (NodeId j = 0; j < 8; ++j) {
      if (j != c) expected.insert(std::minmax(c, j));
    }
  }
  const auto edges = g.edges();
  EXPECT_EQ(std::set<Edge>(edges.begin(), edges.end()), expected);
}

TEST(GenerateStarpartiteTest, EdgeCases) {
  EXPECT_EQ(generate_starpartite(8, 0, 1).edge_count(), 0u);
  EXPECT_EQ(generate_starpartite(5, 5, 1).edge_count(), 10u);
  EXPECT_THROW(generate_starpartite(5, 6, 1), ParameterError);
}

TEST(GenerateStarpartiteTest, CentersUniform) {
  const int seeds = 20000;
  std::vector<int> hits(10, 0);
  for (int s = 0; s < seeds; ++s) {
    const Graph g = generate_starpartite(10, 3, s);
    for (NodeId i = 0; i < 10; ++i) hits[i] += g.degree(i) == 9;
  }
  const double se = std::sqrt(0.3 * 0.7 / seeds);
  for (int h : hits) EXPECT_NEAR(h / static_cast<double>(seeds), 0.3, 4.5 * se);
}

TEST(GenerateCliqueTest, Examples) {
  EXPECT_EQ(generate_clique_plus_isolated(10, 10, 1).edge_count(), 45u);
  EXPECT_EQ(generate_clique_plus_isolated(10, 0, 1).edge_count(), 0u);
  const Graph g = generate_clique_plus_isolated(10, 4, 1);
  EXPECT_EQ(g.edge_count(), 6u);
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  EXPECT_THAT(d, ElementsAre(0, 0, 0, 0, 0, 0, 3, 3, 3, 3));
  EXPECT_THROW(generate_clique_plus_isolated(10, 11, 1), ParameterError);
}

TEST(GenerateBoundedTest, Examples) {
  EXPECT_EQ(generate_bounded(100, 0, 0.7, 1).edge_count(), 0u);
  const Graph g = generate_bounded(20, 19, 1.0, 1);
  EXPECT_LE(g.max_degree(), 19u);
  EXPECT_NO_THROW(g.check_invariants());
}

TEST(GenerateBoundedTest, RespectsBoundOnFuzzedInputs) {
  Stream rng(2024);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + rng() % 200;
    const std::size_t d = rng() % n;
    const double density = rng.uniform();
    const Graph g = generate_bounded(n, d, density, rng());
    EXPECT_LE(g.max_degree(), d);
    EXPECT_NO_THROW(g.check_invariants());
  }
}

TEST(GenerateBoundedTest, TruncationKeepsSubgraphOfSample) {
  int truncated = 0;
  for (Seed seed = 0; seed < 60; ++seed) {
    const Graph sample = generate_er(40, 3.0 / 80.0, seed);
    const Graph g = generate_bounded(40, 3, 1.0, seed);
    EXPECT_LE(g.max_degree(), 3u);
    for (const auto& [a, b] : g.edges()) EXPECT_TRUE(sample.has_edge(a, b));
    truncated += sample.max_degree() > 3;
  }
  EXPECT_GT(truncated, 0);
}

TEST(GeneratorsTest, InvariantsAndDeterminismUnderFuzzing) {
  Stream rng(77);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + rng() % 40;
    const Seed seed = rng();
    Graph a;
    Graph b;
    switch (k % 5) {
      case 0: {
        const double p = rng.uniform();
        a = generate_er(n, p, seed);
        b = generate_er(n, p, seed);
        break;
      }
      case 1: {
        std::size_t d = rng() % std::min<std::size_t>(n, 4);
        if ((n * d) % 2) d = d > 0 ? d - 1 : 0;
        a = generate_regular(n, d, seed);
        b = generate_regular(n, d, seed);
        break;
      }
      case 2: {
        const std::size_t t = rng() % (n + 1);
        a = generate_starpartite(n, t, seed);
        b = generate_starpartite(n, t, seed);
        break;
      }
      case 3: {
        const std::size_t c = rng() % (n + 1);
        a = generate_clique_plus_isolated(n, c, seed);
        b = generate_clique_plus_isolated(n, c, seed);
        break;
      }
      default: {
        const std::size_t d = rng() % n;
        const double density = rng.uniform();
        a = generate_bounded(n, d, density, seed);
        b = generate_bounded(n, d, density, seed);
        break;
      }
    }
    ASSERT_NO_THROW(a.check_invariants());
    ASSERT_EQ(a, b);
  }
}

TEST(DegreePmfTest, Examples) {
  EXPECT_THAT(degree_pmf(Graph(4)), ElementsAre(1, 0, 0, 0));
  EXPECT_THAT(degree_pmf(generate_clique_plus_isolated(4, 4, 1)), ElementsAre(0, 0, 0, 1));
  const auto p = degree_pmf(Path3());
  EXPECT_DOUBLE_EQ(p[0], 0.0);
  EXPECT_DOUBLE_EQ(p[1], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(p[2], 1.0 / 3.0);
}

TEST(DegreePmfTest, SumsToOne) {
  for (int s = 0; s < 50; ++s) {
    const auto p = degree_pmf(generate_er(1 + s * 7, 0.2, s));
    double total = 0.0;
    for (double x : p) total += x;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(RewireNodeTest, CurrentNeighborhoodIsIdentity) {
  const Graph g = generate_er(12, 0.4, 3);
  for (NodeId i = 0; i < 12; ++i) {
    auto nb = g.neighbors(i);
    EXPECT_EQ(rewire_node(g, i, {nb.begin(), nb.end()}), g);
  }
}

TEST(RewireNodeTest, EmptyToStar) {
  const Graph star = rewire_node(Graph(6), 0, {1, 2, 3, 4, 5});
  EXPECT_EQ(star.degree(0), 5u);
  for (NodeId i = 1; i < 6; ++i) EXPECT_THAT(Neighbors(star, i), ElementsAre(0));
}

TEST(RewireNodeTest, RejectsSelfLoop) {
  EXPECT_THROW(rewire_node(Graph(4), 2, {1, 2}), ParameterError);
}

TEST(RewireNodeTest, ResultIsNodeNeighbor) {
  Stream rng(8);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + rng() % 10;
    const Graph g = generate_er(n, rng.uniform(), rng());
    const auto i = static_cast<NodeId>(rng() % n);
    std::vector<NodeId> s;
    for (NodeId j = 0; j < n; ++j) {
      if (j != i && rng.bernoulli(0.5)) s.push_back(j);
    }
    const Graph h = rewire_node(g, i, s);
    const std::size_t dist = node_distance(g, h);
    auto nb = g.neighbors(i);
    const bool same = std::vector<NodeId>(nb.begin(), nb.end()) == s;
    EXPECT_EQ(dist, same ? 0u : 1u);
    // Induced subgraph on the other nodes is untouched.
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = 0; b < n; ++b) {
        if (a != i && b != i) ASSERT_EQ(g.has_edge(a, b), h.has_edge(a, b));
      }
    }
  }
}

TEST(NodeDistanceTest, Examples) {
  const Graph g = generate_er(9, 0.5, 4);
  EXPECT_EQ(node_distance(g, g), 0u);
  for (std::size_t t = 0; t <= 5; ++t) {
    EXPECT_EQ(node_distance(Graph(10), generate_starpartite(10, t, t)), t);
  }
  const Graph one = Graph::from_edges(5, {{1, 3}});
  EXPECT_EQ(node_distance(Graph(5), one), 1u);
  EXPECT_THROW(node_distance(Graph(5), Graph(6)), ParameterError);
}

TEST(NodeDistanceTest, UpperBoundDominatesExact) {
  Stream rng(3);
  for (int k = 0; k < 100; ++k) {
    const Graph a = generate_er(8, 0.4, rng());
    const Graph b = generate_er(8, 0.4, rng());
    EXPECT_LE(node_distance(a, b), node_distance_upper(a, b));
  }
  EXPECT_EQ(node_distance_upper(Graph(10), generate_starpartite(10, 2, 1)), 10u);
}

TEST(EdgeListTest, RoundTrip) {
  const Graph g = generate_er(30, 0.2, 9);
  std::stringstream buf;
  write_edge_list(buf, g);
  const std::string text = buf.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            std::to_string(g.n()) + " " + std::to_string(g.edge_count()));
  EXPECT_EQ(read_edge_list(buf), g);
}

TEST(EdgeListTest, RejectsMalformed) {
  std::stringstream truncated("4 2\n0 1\n");
  EXPECT_THROW(read_edge_list(truncated), ParameterError);
  std::stringstream range("3 1\n0 5\n");
  EXPECT_THROW(read_edge_list(range), ParameterError);
  std::stringstream header("x y\n");
  EXPECT_THROW(read_edge_list(header), ParameterError);
}

}  // namespace
}  // namespace lndp
