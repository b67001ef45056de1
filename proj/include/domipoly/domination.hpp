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

// Dominating-set counting.
//
// A set S dominates G when N[S] = V. Everything here is exhaustive: either a
// scan of all C(n, i) subsets of one size, or one sweep over all 2^n subsets.

#ifndef DOMIPOLY_DOMINATION_HPP_
#define DOMIPOLY_DOMINATION_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "domipoly/canonical.hpp"
#include "domipoly/error.hpp"
#include "domipoly/graph.hpp"
#include "domipoly/polynomial.hpp"

namespace domipoly {

// Largest order accepted by the 2^n sweeps.
inline constexpr int kMaxSweepOrder = 30;

inline bool is_dominating(const Graph& g, VertexSet s) {
  return closed_neighborhood_set(g, s) == g.vertices();
}

// d(G, i), by scanning every i-subset in increasing bitmask order.
inline BigInt count_dominating(const Graph& g, int i) {
  if (i < 0 || i > g.order()) {
    throw PreconditionError("count_dominating: size " + std::to_string(i) +
                            " outside 0.." + std::to_string(g.order()));
  }
  std::uint64_t count = 0;
  for_each_subset_of_size(g.vertices(), i, [&](VertexSet s) {
    if (is_dominating(g, s)) ++count;
  });
  return count;
}

// d_v(G, i): dominating i-sets that contain v.
inline BigInt count_dominating_containing(const Graph& g, Vertex v, int i) {
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("count_dominating_containing: no vertex " +
                            std::to_string(v));
  }
  if (i < 1 || i > g.order()) {
    throw PreconditionError("count_dominating_containing: size " +
                            std::to_string(i) + " outside 1.." +
                            std::to_string(g.order()));
  }
  std::uint64_t count = 0;
  for_each_subset_of_size(g.vertices().without(v), i - 1, [&](VertexSet s) {
    if (is_dominating(g, s.with(v))) ++count;
  });
  return count;
}

namespace detail {

// Closed-neighbourhood unions of every subset of `count` consecutive vertices
// starting at `offset`: table[mask] = N[{offset + b : bit b of mask}].
inline std::vector<std::uint64_t> closed_union_table(const Graph& g, int offset,
                                                     int count) {
  std::vector<std::uint64_t> table(std::size_t{1} << count, 0);
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    const int b = std::countr_zero(mask);
    table[mask] = table[mask & (mask - 1)] |
                  g.closed_neighbors(offset + b).bits();
  }
  return table;
}

inline void check_sweep_order(const Graph& g, const char* who) {
  if (g.order() > kMaxSweepOrder) {
    throw CapacityError(std::string(who) + ": order " +
                        std::to_string(g.order()) + " exceeds " +
                        std::to_string(kMaxSweepOrder) +
                        "; factor the graph into components and multiply "
                        "their polynomials");
  }
}

// Runs body(hi_begin, hi_end, tally) over disjoint ranges of the high half
// on several threads, then sums the per-thread tallies.
template <std::size_t N, class Body>
std::array<std::uint64_t, N> partitioned_sweep(std::size_t hi_count, Body body) {
  const std::size_t max_threads =
      std::max(1u, std::thread::hardware_concurrency());
  const std::size_t threads =
      hi_count >= 256 ? std::min<std::size_t>(max_threads, 16) : 1;
  std::vector<std::array<std::uint64_t, N>> tallies(threads);
  for (auto& t : tallies) t.fill(0);
  std::vector<std::thread> pool;
  const std::size_t chunk = (hi_count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(hi_count, begin + chunk);
    if (begin >= end) continue;
    pool.emplace_back([&, t, begin, end] { body(begin, end, tallies[t]); });
  }
  for (auto& th : pool) th.join();
  std::array<std::uint64_t, N> total{};
  for (const auto& t : tallies) {
    for (std::size_t i = 0; i < N; ++i) total[i] += t[i];
  }
  return total;
}

}  // namespace detail

// D(G, x) in a single sweep over all 2^n subsets, each tested once and
// tallied by size. The vertex set is split into two halves with precomputed
// N[.] tables so each subset costs one OR and one compare.
inline DominationPolynomial domination_polynomial(const Graph& g) {
  detail::check_sweep_order(g, "domination_polynomial");
  const int n = g.order();
  if (n == 0) return DominationPolynomial();
  const int lo = n / 2;
  const int hi = n - lo;
  const auto lo_table = detail::closed_union_table(g, 0, lo);
  const auto hi_table = detail::closed_union_table(g, lo, hi);
  const std::uint64_t full = g.vertices().bits();

  const auto tally = detail::partitioned_sweep<kMaxSweepOrder + 1>(
      hi_table.size(),
      [&](std::size_t begin, std::size_t end, auto& counts) {
        for (std::size_t b = begin; b < end; ++b) {
          const std::uint64_t cover = hi_table[b];
          const int base = std::popcount(b);
          for (std::size_t a = 0; a < lo_table.size(); ++a) {
            if ((lo_table[a] | cover) == full) ++counts[base + std::popcount(a)];
          }
        }
      });

  std::vector<BigInt> coeff(n + 1);
  for (int i = 0; i <= n; ++i) coeff[i] = tally[i];
  return DominationPolynomial(std::move(coeff));
}

// d(G, i) by inclusion-exclusion over the sets A_v of i-subsets missing N[v]:
// the number of non-dominating i-sets is
//   sum over nonempty T of (-1)^(|T|+1) C(n - |N[T]|, i).
// Terms are grouped by (|T| mod 2, |N[T]|) so the big-integer work is O(n).
inline BigInt count_dominating_ie(const Graph& g, int i) {
  detail::check_sweep_order(g, "count_dominating_ie");
  const int n = g.order();
  if (i < 0 || i > n) {
    throw PreconditionError("count_dominating_ie: size " + std::to_string(i) +
                            " outside 0.." + std::to_string(n));
  }
  if (n == 0) return i == 0 ? 1 : 0;
  const int lo = n / 2;
  const int hi = n - lo;
  const auto lo_table = detail::closed_union_table(g, 0, lo);
  const auto hi_table = detail::closed_union_table(g, lo, hi);

  // Slot 2m + parity(|T|) counts subsets T with |N[T]| = m.
  constexpr std::size_t kSlots = 2 * (kMaxSweepOrder + 1);
  const auto tally = detail::partitioned_sweep<kSlots>(
      hi_table.size(), [&](std::size_t begin, std::size_t end, auto& counts) {
        for (std::size_t b = begin; b < end; ++b) {
          const std::uint64_t cover = hi_table[b];
          const int parity_b = std::popcount(b) & 1;
          for (std::size_t a = 0; a < lo_table.size(); ++a) {
            const int m = std::popcount(lo_table[a] | cover);
            const int parity = parity_b ^ (std::popcount(a) & 1);
            ++counts[2 * m + parity];
          }
        }
      });

  BigInt non_dominating = 0;
  // m = 0 only for T = {} (even), which the sum excludes.
  for (int m = 1; m <= n; ++m) {
    const BigInt odd = tally[2 * m + 1];
    const BigInt even = tally[2 * m];
    non_dominating += (odd - even) * binomial(n - m, i);
  }
  return binomial(n, i) - non_dominating;
}

// The family of gamma-sets.
struct GammaFamily {
  int gamma = 0;
  // Ascending bitmask order.
  std::vector<VertexSet> sets;
};

inline GammaFamily gamma_sets(const Graph& g) {
  GammaFamily out;
  for (int i = 0; i <= g.order(); ++i) {
    for_each_subset_of_size(g.vertices(), i, [&](VertexSet s) {
      if (is_dominating(g, s)) out.sets.push_back(s);
    });
    if (!out.sets.empty()) {
      out.gamma = i;
      return out;
    }
  }
  throw InternalError("gamma_sets: the full vertex set failed to dominate");
}

inline int domination_number(const Graph& g) { return gamma_sets(g).gamma; }

// d(G, i) = n * d_v(G, i) / i for a vertex-transitive G, taking v = 0. The
// division is checked rather than assumed.
inline BigInt count_via_transitivity(const Graph& g, int i) {
  if (!is_vertex_transitive(g)) {
    throw PreconditionError("count_via_transitivity: graph is not vertex-transitive");
  }
  const BigInt numerator = g.order() * count_dominating_containing(g, 0, i);
  if (numerator % i != 0) {
    throw InternalError("count_via_transitivity: n * d_v(G," +
                        std::to_string(i) + ") = " + numerator.str() +
                        " is not divisible by " + std::to_string(i));
  }
  return numerator / i;
}

}  // namespace domipoly

#endif  // DOMIPOLY_DOMINATION_HPP_
