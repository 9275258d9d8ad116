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

// Undirected simple graphs on nodes {0, ..., n-1}, the random families used
// by the estimators and lower-bound checks, and node-rewiring utilities.

#ifndef LNDP_GRAPH_HPP_
#define LNDP_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lndp/errors.hpp"
#include "lndp/random.hpp"

namespace lndp {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Immutable adjacency structure in compressed sparse row form. Neighbor
// lists are sorted and free of duplicates and self-loops.
class Graph {
 public:
  Graph() : offsets_{0} {}

  // An edgeless graph on n nodes.
  explicit Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

  // Builds from an arbitrary edge list. Duplicates and either orientation are
  // accepted; self-loops and out-of-range ids are rejected.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges) {
    for (auto& [a, b] : edges) {
      internal::require(a < n && b < n, "edge endpoint out of range");
      internal::require(a != b, "self-loop in edge list");
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::size_t> deg(n, 0);
    for (const auto& [a, b] : edges) {
      ++deg[a];
      ++deg[b];
    }
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.nbrs_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (a, b), so appending keeps every list sorted.
    for (const auto& [a, b] : edges) g.nbrs_[cursor[b]++] = a;
    for (const auto& [a, b] : edges) g.nbrs_[cursor[a]++] = b;
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(g.nbrs_.begin() + g.offsets_[i], g.nbrs_.begin() + g.offsets_[i + 1]);
    }
    return g;
  }

  // Builds from per-node neighbor sets. The sets must be symmetric.
  static Graph from_adjacency(const std::vector<std::vector<NodeId>>& adj) {
    Graph g(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
      g.offsets_[i + 1] = g.offsets_[i] + adj[i].size();
    }
    g.nbrs_.reserve(g.offsets_.back());
    for (const auto& list : adj) {
      std::vector<NodeId> sorted(list);
      std::sort(sorted.begin(), sorted.end());
      g.nbrs_.insert(g.nbrs_.end(), sorted.begin(), sorted.end());
    }
    g.check_invariants();
    return g;
  }

  std::size_t n() const { return n_; }
  std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }
  std::span<const NodeId> neighbors(NodeId i) const {
    return {nbrs_.data() + offsets_[i], degree(i)};
  }
  std::size_t edge_count() const { return nbrs_.size() / 2; }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < n_; ++i) best = std::max(best, degree(i));
    return best;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = degree(static_cast<NodeId>(i));
    return d;
  }

  bool has_edge(NodeId i, NodeId j) const {
    auto nb = neighbors(i);
    return std::binary_search(nb.begin(), nb.end(), j);
  }

  // Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId i = 0; i < n_; ++i) {
      for (NodeId j : neighbors(i)) {
        if (i < j) out.emplace_back(i, j);
      }
    }
    return out;
  }

  // Throws InvariantViolation on asymmetry, self-loops, duplicates or
  // unsorted lists.
  void check_invariants() const {
    for (NodeId i = 0; i < n_; ++i) {
      auto nb = neighbors(i);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (nb[k] >= n_) throw InvariantViolation("neighbor id out of range");
        if (nb[k] == i) throw InvariantViolation("self-loop");
        if (k > 0 && nb[k - 1] >= nb[k]) {
          throw InvariantViolation("neighbor list unsorted or duplicated");
        }
        if (!has_edge(nb[k], i)) throw InvariantViolation("asymmetric adjacency");
      }
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.nbrs_ == b.nbrs_;
  }

 private:
  friend Graph generate_er(std::size_t, double, Seed);

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> nbrs_;
};

namespace internal {

// Visits every pair (i, j), i < j, selected independently with probability
// p, in lexicographic order. Uses geometric skips so the cost is
// proportional to the number of selected pairs.
template <typename Visit>
void for_each_bernoulli_pair(std::size_t n, double p, Seed seed, Visit&& visit) {
  if (n < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) visit(i, j);
    }
    return;
  }
  Stream rng(seed);
  const double log_q = std::log1p(-p);
  std::size_t i = 0;
  std::size_t j = 0;  // candidate is (i, i + 1 + j)
  for (;;) {
    const double u = rng.uniform();
    const double skip = std::floor(std::log1p(-u) / log_q);
    std::size_t k = skip > 1e18 ? static_cast<std::size_t>(1e18)
                                : static_cast<std::size_t>(skip);
    j += k;
    while (i < n - 1 && j >= n - 1 - i) {
      j -= n - 1 - i;
      ++i;
    }
    if (i >= n - 1) return;
    visit(static_cast<NodeId>(i), static_cast<NodeId>(i + 1 + j));
    ++j;
  }
}

inline std::vector<NodeId> random_subset(std::size_t n, std::size_t k, Stream& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  for (std::size_t a = 0; a < k; ++a) {
    std::uniform_int_distribution<std::size_t> pick(a, n - 1);
    std::swap(perm[a], perm[pick(rng)]);
  }
  perm.resize(k);
  std::sort(perm.begin(), perm.end());
  return perm;
}

}  // namespace internal

// G(n, p). Two passes replay the same stream: one sizes the rows, one fills
// them, so no intermediate edge list is held.
inline Graph generate_er(std::size_t n, double p, Seed seed) {
  internal::require(n >= 1, "n must be positive");
  internal::require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
  const Seed key = derive_seed(seed, StreamLabel::kGraph);
  Graph g(n);
  internal::for_each_bernoulli_pair(n, p, key, [&](NodeId i, NodeId j) {
    ++g.offsets_[i + 1];
    ++g.offsets_[j + 1];
  });
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.nbrs_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Pairs arrive in lexicographic order, which keeps each row sorted.
  internal::for_each_bernoulli_pair(n, p, key, [&](NodeId i, NodeId j) {
    g.nbrs_[cursor[i]++] = j;
    g.nbrs_[cursor[j]++] = i;
  });
  return g;
}

// Configuration model with full restart on any self-loop or repeated pair.
// The result is close to, but not exactly, uniform over d-regular graphs.
inline Graph generate_regular(std::size_t n, std::size_t d, Seed seed) {
  internal::require(n >= 1, "n must be positive");
  internal::require(d < n, "degree must be at most n - 1");
  internal::require((n * d) % 2 == 0, "n * d must be even");
  if (d == 0) return Graph(n);
  Stream rng(derive_seed(seed, StreamLabel::kGraph));
  std::vector<NodeId> stubs(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill_n(stubs.begin() + i * d, d, static_cast<NodeId>(i));
  }
  std::vector<Edge> edges(n * d / 2);
  const std::size_t budget = 1000 * n;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      NodeId a = stubs[2 * e];
      NodeId b = stubs[2 * e + 1];
      if (a == b) ok = false;
      edges[e] = std::minmax(a, b);
    }
    if (!ok) continue;
    std::vector<Edge> sorted(edges);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    return Graph::from_edges(n, std::move(sorted));
  }
  throw GenerationError("configuration model exceeded retry budget");
}

// Star-partite graph: a uniformly random center set T of size t, with every
// center joined to every other node.
inline Graph generate_starpartite(std::size_t n, std::size_t t, Seed seed) {
  internal::require(n >= 1, "n must be positive");
  internal::require(t <= n, "center count exceeds n");
  Stream rng(derive_seed(seed, StreamLabel::kGraph));
  const std::vector<NodeId> centers = internal::random_subset(n, t, rng);
  std::vector<char> is_center(n, 0);
  for (NodeId c : centers) is_center[c] = 1;
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId i = 0; i < n; ++i) {
    if (is_center[i]) {
      adj[i].reserve(n - 1);
      for (NodeId j = 0; j < n; ++j) {
        if (j != i) adj[i].push_back(j);
      }
    } else {
      adj[i] = centers;
    }
  }
  return Graph::from_adjacency(adj);
}

// A uniformly random k-clique plus n - k isolated nodes.
inline Graph generate_clique_plus_isolated(std::size_t n, std::size_t k, Seed seed) {
  internal::require(n >= 1, "n must be positive");
  internal::require(k <= n, "clique size exceeds n");
  Stream rng(derive_seed(seed, StreamLabel::kGraph));
  const std::vector<NodeId> members = internal::random_subset(n, k, rng);
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId a : members) {
    adj[a].reserve(k - 1);
    for (NodeId b : members) {
      if (a != b) adj[a].push_back(b);
    }
  }
  return Graph::from_adjacency(adj);
}

// Samples G(n, min(density, D / (2n))) and then deletes edges until every
// degree is at most D. Each deletion takes the highest-degree node (lowest
// id on ties) and drops its edge to the highest-degree neighbor (again
// lowest id on ties).
inline Graph generate_bounded(std::size_t n, std::size_t max_deg, double density,
                              Seed seed) {
  internal::require(n >= 1, "n must be positive");
  internal::require(max_deg <= n - 1, "degree bound must be at most n - 1");
  internal::require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  const double p = std::min(density, static_cast<double>(max_deg) / (2.0 * n));
  Graph g = generate_er(n, p, seed);
  if (g.max_degree() <= max_deg) return g;

  std::vector<std::set<NodeId>> adj(n);
  for (NodeId i = 0; i < n; ++i) {
    auto nb = g.neighbors(i);
    adj[i].insert(nb.begin(), nb.end());
  }
  // Ordered by (-degree, id): begin() is the node to trim next.
  using Key = std::pair<std::int64_t, NodeId>;
  std::set<Key> order;
  auto key = [&](NodeId v) { return Key{-static_cast<std::int64_t>(adj[v].size()), v}; };
  for (NodeId i = 0; i < n; ++i) order.insert(key(i));
  while (adj[order.begin()->second].size() > max_deg) {
    const NodeId v = order.begin()->second;
    NodeId w = *adj[v].begin();
    for (NodeId c : adj[v]) {
      if (adj[c].size() > adj[w].size()) w = c;
    }
    order.erase(key(v));
    order.erase(key(w));
    adj[v].erase(w);
    adj[w].erase(v);
    order.insert(key(v));
    order.insert(key(w));
  }
  std::vector<std::vector<NodeId>> lists(n);
  for (NodeId i = 0; i < n; ++i) lists[i].assign(adj[i].begin(), adj[i].end());
  return Graph::from_adjacency(lists);
}

// Empirical degree distribution, length n.
inline std::vector<double> degree_pmf(const Graph& g) {
  std::vector<std::size_t> counts(g.n(), 0);
  for (NodeId i = 0; i < g.n(); ++i) ++counts[g.degree(i)];
  std::vector<double> pmf(g.n());
  for (std::size_t d = 0; d < g.n(); ++d) {
    pmf[d] = static_cast<double>(counts[d]) / static_cast<double>(g.n());
  }
  return pmf;
}

// Replaces the neighborhood of node i by new_neighbors, leaving every edge
// not incident to i unchanged.
inline Graph rewire_node(const Graph& g, NodeId i, const std::vector<NodeId>& new_neighbors) {
  internal::require(i < g.n(), "node id out of range");
  std::vector<char> in_new(g.n(), 0);
  for (NodeId j : new_neighbors) {
    internal::require(j < g.n(), "neighbor id out of range");
    internal::require(j != i, "rewiring would create a self-loop");
    in_new[j] = 1;
  }
  std::vector<std::vector<NodeId>> adj(g.n());
  for (NodeId v = 0; v < g.n(); ++v) {
    if (v == i) continue;
    for (NodeId w : g.neighbors(v)) {
      if (w != i) adj[v].push_back(w);
    }
    if (in_new[v]) adj[v].push_back(i);
  }
  for (NodeId j = 0; j < g.n(); ++j) {
    if (in_new[j]) adj[i].push_back(j);
  }
  return Graph::from_adjacency(adj);
}

namespace internal {

inline std::vector<Edge> symmetric_difference(const Graph& g, const Graph& h) {
  require(g.n() == h.n(), "graphs have different node counts");
  const auto eg = g.edges();
  const auto eh = h.edges();
  std::vector<Edge> diff;
  std::set_symmetric_difference(eg.begin(), eg.end(), eh.begin(), eh.end(),
                                std::back_inserter(diff));
  return diff;
}

}  // namespace internal

// Number of nodes whose neighborhoods differ between g and h. An upper bound
// on the node distance.
inline std::size_t node_distance_upper(const Graph& g, const Graph& h) {
  const auto diff = internal::symmetric_difference(g, h);
  std::vector<char> touched(g.n(), 0);
  for (const auto& [a, b] : diff) touched[a] = touched[b] = 1;
  return static_cast<std::size_t>(std::count(touched.begin(), touched.end(), 1));
}

// Minimum number of node rewirings turning g into h: the minimum vertex cover
// of the symmetric-difference edge set. Exhaustive, so limited to n <= 12.
inline std::size_t node_distance(const Graph& g, const Graph& h) {
  internal::require(g.n() == h.n(), "graphs have different node counts");
  internal::require(g.n() <= 12, "exact node distance is limited to n <= 12");
  const auto diff = internal::symmetric_difference(g, h);
  if (diff.empty()) return 0;
  const std::uint32_t full = 1u << g.n();
  std::size_t best = g.n();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool covers = std::all_of(diff.begin(), diff.end(), [&](const Edge& e) {
      return ((mask >> e.first) & 1u) || ((mask >> e.second) & 1u);
    });
    if (covers) best = size;
  }
  return best;
}

// Edge-list text format: "n m" followed by m sorted lines "i j" with i < j.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

inline Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 1 || m < 0) {
    throw ParameterError("edge list: malformed header");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    long long a = -1;
    long long b = -1;
    if (!(in >> a >> b)) {
      throw ParameterError("edge list: expected " + std::to_string(m) + " edges, got " +
                           std::to_string(e));
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParameterError("edge list: endpoint out of range on edge " + std::to_string(e));
    }
    edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace lndp

#endif  // LNDP_GRAPH_HPP_
