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

// Slow, obviously-correct reference implementations used only by tests.
// They work on plain adjacency matrices and share no code with the library
// beyond reading a Graph's edges.

#ifndef DOMIPOLY_TESTS_ORACLES_HPP_
#define DOMIPOLY_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "domipoly/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const domipoly::Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline domipoly::Graph from_matrix(const Matrix& m) {
  std::vector<domipoly::Edge> e;
  for (int u = 0; u < static_cast<int>(m.size()); ++u) {
    for (int v = u + 1; v < static_cast<int>(m.size()); ++v) {
      if (m[u][v]) e.emplace_back(u, v);
    }
  }
  return domipoly::Graph(static_cast<int>(m.size()), e);
}

// Dominating-set test straight from the definition.
inline bool dominates(const Matrix& m, std::uint64_t set) {
  const int n = static_cast<int>(m.size());
  for (int v = 0; v < n; ++v) {
    if (set >> v & 1) continue;
    bool hit = false;
    for (int u = 0; u < n && !hit; ++u) hit = (set >> u & 1) && m[u][v];
    if (!hit) return false;
  }
  return true;
}

// coeff[i] = number of dominating i-sets, by scanning every subset.
inline std::vector<long long> domination_coefficients(const domipoly::Graph& g) {
  const Matrix m = matrix(g);
  const int n = g.order();
  std::vector<long long> c(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (dominates(m, s)) ++c[__builtin_popcountll(s)];
  }
  return c;
}

inline long long dominating_containing(const domipoly::Graph& g, int v, int i) {
  const Matrix m = matrix(g);
  long long c = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if ((s >> v & 1) && __builtin_popcountll(s) == i && dominates(m, s)) ++c;
  }
  return c;
}

// Isomorphism by trying permutations, extending a partial map one vertex at a
// time and checking adjacency to already-mapped vertices.
inline bool isomorphic(const domipoly::Graph& a, const domipoly::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  const Matrix ma = matrix(a);
  const Matrix mb = matrix(b);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = ma[u][v] == mb[map[u]][w];
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

// Minimum upper-triangle bit string over all n! relabellings. Equal iff
// isomorphic; only usable for small n.
inline std::string brute_canonical(const domipoly::Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s.push_back(m[p[i]][p[j]] ? '1' : '0');
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

// Number of automorphisms, by enumerating permutations.
inline long long automorphism_count(const domipoly::Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) ok = m[i][j] == m[p[i]][p[j]];
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Vertex orbits under all automorphisms. The automorphisms form a group, so
// the smallest preimage of w is the smallest member of its orbit.
inline std::vector<int> orbit_ids(const domipoly::Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) ok = m[i][j] == m[p[i]][p[j]];
    }
    if (ok) {
      for (int v = 0; v < n; ++v) id[p[v]] = std::min(id[p[v]], v);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return id;
}

// Girth as the shortest "edge uv plus a u-v path avoiding that edge".
inline std::optional<int> girth(const domipoly::Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  std::optional<int> best;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!m[u][v]) continue;
      std::vector<int> dist(n, -1);
      std::deque<int> q{u};
      dist[u] = 0;
      while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        for (int y = 0; y < n; ++y) {
          if (!m[x][y] || dist[y] >= 0) continue;
          if ((x == u && y == v) || (x == v && y == u)) continue;
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
      }
      if (dist[v] > 0 && (!best || dist[v] + 1 < *best)) best = dist[v] + 1;
    }
  }
  return best;
}

// (triangles, 4-sets with exactly 5 edges, 4-sets with 6 edges).
struct Small {
  int triangles = 0;
  int diamonds = 0;
  int k4 = 0;
};

inline Small small_subgraphs(const domipoly::Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  Small s;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        s.triangles += m[a][b] && m[b][c] && m[a][c];
        for (int d = c + 1; d < n; ++d) {
          const int e = m[a][b] + m[a][c] + m[a][d] + m[b][c] + m[b][d] + m[c][d];
          s.diamonds += e == 5;
          s.k4 += e == 6;
        }
      }
    }
  }
  return s;
}

inline bool connected(const domipoly::Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  const Matrix m = matrix(g);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y) {
      if (m[x][y] && !seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

// All labelled k-regular graphs on n vertices, by choosing edges in
// lexicographic order under degree limits; then one representative per
// isomorphism class via pairwise isomorphism tests.
inline std::vector<domipoly::Graph> regular_graphs(int n, int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> chosen;
  std::vector<domipoly::Graph> reps;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pairs.size()) {
      for (int d : deg) {
        if (d != k) return;
      }
      domipoly::Graph g(n, chosen);
      for (const auto& r : reps) {
        if (isomorphic(r, g)) return;
      }
      reps.push_back(std::move(g));
      return;
    }
    const auto [u, v] = pairs[idx];
    // Vertex u sees no more pairs after (u, n-1): it must be full by then.
    if (deg[u] < k && deg[v] < k) {
      ++deg[u];
      ++deg[v];
      chosen.emplace_back(u, v);
      self(self, idx + 1);
      chosen.pop_back();
      --deg[u];
      --deg[v];
    }
    if (v == n - 1 && deg[u] != k) return;
    self(self, idx + 1);
  };
  rec(rec, 0);
  return reps;
}

inline domipoly::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<domipoly::Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return domipoly::Graph(n, e);
}

inline domipoly::Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<domipoly::Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return domipoly::Permutation(std::move(p));
}

inline long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle

#endif  // DOMIPOLY_TESTS_ORACLES_HPP_
