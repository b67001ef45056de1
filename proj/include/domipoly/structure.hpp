// Copyright 2026 The domipoly Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Structural facts read off domination polynomials, and the small subgraph
// counts that correct the top coefficients of cubic graphs on 10 vertices.

#ifndef DOMIPOLY_STRUCTURE_HPP_
#define DOMIPOLY_STRUCTURE_HPP_

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "domipoly/domination.hpp"
#include "domipoly/error.hpp"
#include "domipoly/graph.hpp"
#include "domipoly/polynomial.hpp"
#include "json.hpp"

namespace domipoly {

// What the coefficients alone say about the minimum degree. With
// l = min{ j : d(G, j) = C(n, j) }, every graph with this polynomial has
// minimum degree n - l and at least C(n, l-1) - d(G, l-1) vertices of that
// degree (exactly that many when no two of them are closed twins).
struct MinDegreeInference {
  int l = 0;
  int delta = 0;
  BigInt min_degree_vertex_lower_bound = 0;
};

inline MinDegreeInference infer_min_degree(const DominationPolynomial& p) {
  const int n = p.order();
  for (int j = 0; j <= n; ++j) {
    if (p[j] != binomial(n, j)) continue;
    MinDegreeInference out;
    out.l = j;
    out.delta = n - j;
    out.min_degree_vertex_lower_bound =
        j == 0 ? BigInt(0) : binomial(n, j - 1) - p[j - 1];
    return out;
  }
  throw PreconditionError(
      "infer_min_degree: no coefficient equals its binomial; not the "
      "polynomial of a graph");
}

// Some pair u != v with N[u] = N[v], if any (smallest u, then smallest v).
inline std::optional<std::pair<Vertex, Vertex>> has_closed_twins(
    const Graph& g, std::optional<VertexSet> among = std::nullopt) {
  const VertexSet pool = among.value_or(g.vertices());
  for (Vertex u : pool) {
    for (Vertex v : pool) {
      if (v > u && g.closed_neighbors(u) == g.closed_neighbors(v)) {
        return std::pair{u, v};
      }
    }
  }
  return std::nullopt;
}

struct RegularityTransferReport {
  bool precondition_met = false;
  // Why the precondition failed, when it did.
  std::string precondition_issue;
  int k = -1;
  bool polynomials_equal = false;
  bool g_regular_of_degree_k = false;
  // True unless the polynomials agree, the precondition holds and g is not
  // k-regular, which would contradict the transfer.
  bool consistent = true;
};

// If h is k-regular without closed twins and D(g) = D(h), then g is k-regular.
inline RegularityTransferReport check_regularity_transfer(const Graph& g,
                                                          const Graph& h) {
  RegularityTransferReport r;
  if (!h.is_regular()) {
    r.precondition_issue = "h is not regular";
  } else if (auto twins = has_closed_twins(h)) {
    r.k = h.order() ? h.degree(0) : 0;
    r.precondition_issue = "h has closed twins " +
                           std::to_string(twins->first + 1) + " and " +
                           std::to_string(twins->second + 1);
  } else {
    r.precondition_met = true;
    r.k = h.order() ? h.degree(0) : 0;
  }
  r.polynomials_equal =
      g.order() == h.order() && domination_polynomial(g) == domination_polynomial(h);
  r.g_regular_of_degree_k = r.k >= 0 && g.is_regular(r.k);
  r.consistent = !(r.precondition_met && r.polynomials_equal &&
                   !r.g_regular_of_degree_k);
  return r;
}

struct SubgraphCounts {
  // 4-vertex sets inducing exactly 5 edges (K4 minus an edge). Sets inducing
  // K4 are counted only in `k4`.
  int diamonds = 0;
  int k4 = 0;
  int triangles = 0;
  // Length of a shortest cycle; empty for forests.
  std::optional<int> girth;
};

inline std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

inline SubgraphCounts count_subgraphs(const Graph& g) {
  SubgraphCounts c;
  for_each_subset_of_size(g.vertices(), 3, [&](VertexSet s) {
    int edges = 0;
    for (Vertex v : s) edges += (g.neighbors(v) & s).size();
    if (edges == 6) ++c.triangles;
  });
  for_each_subset_of_size(g.vertices(), 4, [&](VertexSet s) {
    int twice = 0;
    for (Vertex v : s) twice += (g.neighbors(v) & s).size();
    if (twice == 10) ++c.diamonds;
    if (twice == 12) ++c.k4;
  });
  c.girth = girth(g);
  return c;
}

namespace detail {
inline void require_cubic_order_10(const Graph& g, const char* who) {
  if (g.order() != 10 || !g.is_regular(3)) {
    throw PreconditionError(std::string(who) +
                            ": requires a cubic graph of order 10");
  }
}
}  // namespace detail

// d(G, 6) = C(10, 6) - (10 - t - 3s) for cubic G of order 10, with t the
// diamond count and s the K4 count.
inline BigInt d6_by_formula(const Graph& g) {
  detail::require_cubic_order_10(g, "d6_by_formula");
  const SubgraphCounts c = count_subgraphs(g);
  return binomial(10, 6) - (10 - c.diamonds - 3 * c.k4);
}

// Number of distinct sets V \ N[v]. For cubic order-10 graphs these are
// exactly the non-dominating 6-sets.
inline int distinct_closed_complements(const Graph& g) {
  std::set<std::uint64_t> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    seen.insert((g.vertices() - g.closed_neighbors(v)).bits());
  }
  return static_cast<int>(seen.size());
}

struct NonDominatingFiveSets {
  // Distinct non-dominating 5-sets, i.e. 252 - d(G, 5).
  int count = 0;
  // Number of (x, y) choices with y outside N[x]; always 60 for cubic
  // order-10 graphs.
  int generated = 0;
  // generated - count: how many choices reproduced an earlier set.
  int collisions = 0;
  bool collision_free() const { return collisions == 0; }
};

// Every non-dominating 5-set of a cubic order-10 graph misses some N[x], so
// it is V \ (N[x] ∪ {y}) for some x and some y outside N[x]. Enumerates all
// such sets and counts the distinct ones.
inline NonDominatingFiveSets count_nondominating_5sets(const Graph& g) {
  detail::require_cubic_order_10(g, "count_nondominating_5sets");
  std::set<std::uint64_t> seen;
  NonDominatingFiveSets r;
  for (Vertex x = 0; x < 10; ++x) {
    const VertexSet outside = g.vertices() - g.closed_neighbors(x);
    for (Vertex y : outside) {
      seen.insert(outside.without(y).bits());
      ++r.generated;
    }
  }
  r.count = static_cast<int>(seen.size());
  r.collisions = r.generated - r.count;
  return r;
}

struct GammaBoundReport {
  int gamma = 0;
  // floor(3n / 8).
  int bound = 0;
  bool holds = false;
};

// gamma(G) <= 3n/8 for connected G with minimum degree at least 3.
inline GammaBoundReport check_gamma_bound(const Graph& g) {
  if (!is_connected(g) || g.order() == 0) {
    throw PreconditionError("check_gamma_bound: graph is not connected");
  }
  if (g.min_degree() < 3) {
    throw PreconditionError("check_gamma_bound: minimum degree " +
                            std::to_string(g.min_degree()) + " < 3");
  }
  GammaBoundReport r;
  r.gamma = domination_number(g);
  r.bound = 3 * g.order() / 8;
  r.holds = r.gamma <= r.bound;
  return r;
}

inline nlohmann::json to_json(const MinDegreeInference& m) {
  return {{"l", m.l},
          {"delta", m.delta},
          {"min_degree_vertex_lower_bound",
           static_cast<std::int64_t>(m.min_degree_vertex_lower_bound)}};
}

inline nlohmann::json to_json(const SubgraphCounts& c) {
  nlohmann::json j = {{"t", c.diamonds}, {"s", c.k4}, {"triangles", c.triangles}};
  j["girth"] = c.girth ? nlohmann::json(*c.girth) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const RegularityTransferReport& r) {
  return {{"precondition_met", r.precondition_met},
          {"precondition_issue", r.precondition_issue},
          {"k", r.k},
          {"polynomials_equal", r.polynomials_equal},
          {"g_regular_of_degree_k", r.g_regular_of_degree_k},
          {"consistent", r.consistent}};
}

inline nlohmann::json to_json(const NonDominatingFiveSets& r) {
  return {{"count", r.count},
          {"generated", r.generated},
          {"collisions", r.collisions}};
}

inline nlohmann::json to_json(const GammaBoundReport& r) {
  return {{"gamma", r.gamma}, {"bound", r.bound}, {"holds", r.holds}};
}

}  // namespace domipoly

#endif  // DOMIPOLY_STRUCTURE_HPP_
