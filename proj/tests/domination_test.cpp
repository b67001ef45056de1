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

#include <random>
#include <set>
#include <vector>

#include "domipoly/catalog.hpp"
#include "domipoly/domination.hpp"
#include "domipoly/graph.hpp"
#include "domipoly/polynomial.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace domipoly {
namespace {

std::vector<long long> coeffs(const DominationPolynomial& p) {
  std::vector<long long> out;
  for (const auto& c : p.coefficients()) out.push_back(static_cast<long long>(c));
  return out;
}

TEST(PolynomialTest, Binomial) {
  EXPECT_EQ(binomial(10, 6), 210);
  EXPECT_EQ(binomial(10, 0), 1);
  EXPECT_EQ(binomial(10, 11), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(PolynomialTest, ToString) {
  EXPECT_EQ(DominationPolynomial({0, 4, 6, 4, 1}).to_string(), "x^4 + 4x^3 + 6x^2 + 4x");
  EXPECT_EQ(DominationPolynomial({0, 0, 0, 0, 0, 1}).to_string(), "x^5");
  EXPECT_EQ(DominationPolynomial().to_string(), "1");
  EXPECT_EQ(DominationPolynomial({0, 1}).to_string(), "x");
}

TEST(PolynomialTest, Validation) {
  EXPECT_THROW(DominationPolynomial(std::vector<BigInt>{}), PreconditionError);
  EXPECT_THROW(DominationPolynomial({1, -1}), PreconditionError);
}

TEST(PolynomialTest, ProductOfComponents) {
  const DominationPolynomial h{0, 0, 9, 20, 15, 6, 1};
  const DominationPolynomial k4{0, 4, 6, 4, 1};
  EXPECT_EQ(coeffs(polynomial_product(h, k4)),
            (std::vector<long long>{0, 0, 0, 36, 134, 216, 203, 120, 45, 10, 1}));
  EXPECT_EQ(polynomial_product(k4, DominationPolynomial()), k4);
}

TEST(PolynomialTest, JsonRoundTrip) {
  const DominationPolynomial p = domination_polynomial(petersen());
  EXPECT_EQ(to_json(p).dump(), R"({"coeff":[0,0,0,10,75,192,200,120,45,10,1],"n":10})");
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  EXPECT_THROW(polynomial_from_json(nlohmann::json{{"n", 2}, {"coeff", {0, 1}}}),
               PreconditionError);
}

TEST(DominationTest, IsDominating) {
  const Graph star = star_graph(3);
  EXPECT_TRUE(is_dominating(star, star.vertices()));
  EXPECT_TRUE(is_dominating(star, VertexSet{0}));
  EXPECT_FALSE(is_dominating(star, VertexSet{1}));
  const Graph p = petersen();
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = u + 1; v < 10; ++v) EXPECT_FALSE(is_dominating(p, VertexSet{u, v}));
  }
}

TEST(DominationTest, PetersenValues) {
  const Graph p = petersen();
  EXPECT_EQ(count_dominating(p, 3), 10);
  EXPECT_EQ(count_dominating(p, 4), 75);
  EXPECT_EQ(count_dominating_ie(p, 5), 192);
  EXPECT_EQ(count_dominating_ie(p, 6), 200);
  EXPECT_EQ(coeffs(domination_polynomial(p)),
            (std::vector<long long>{0, 0, 0, 10, 75, 192, 200, 120, 45, 10, 1}));
  for (Vertex v = 0; v < 10; ++v) {
    EXPECT_EQ(count_dominating_containing(p, v, 4), 30);
    EXPECT_EQ(count_dominating_containing(p, v, 3), 3);
  }
  EXPECT_EQ(count_via_transitivity(p, 4), 75);
  EXPECT_EQ(count_via_transitivity(p, 3), 10);
}

TEST(DominationTest, SmallGraphs) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(count_dominating(k4, 1), 4);
  EXPECT_EQ(count_dominating(k4, 2), 6);
  EXPECT_EQ(count_dominating_containing(k4, 2, 1), 1);
  EXPECT_EQ(domination_polynomial(empty_graph(5)).to_string(), "x^5");
  EXPECT_EQ(domination_polynomial(empty_graph(0)), DominationPolynomial());
  EXPECT_EQ(count_dominating(empty_graph(0), 0), 1);
  EXPECT_EQ(count_dominating(k4, 0), 0);

  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(coeffs(domination_polynomial(c5)), (std::vector<long long>{0, 0, 5, 10, 5, 1}));
  EXPECT_EQ(count_dominating_containing(c5, 0, 2), 2);
  EXPECT_EQ(count_via_transitivity(c5, 2), 5);
}

TEST(DominationTest, Errors) {
  const Graph p = petersen();
  EXPECT_THROW(count_dominating(p, 11), PreconditionError);
  EXPECT_THROW(count_dominating(p, -1), PreconditionError);
  EXPECT_THROW(count_dominating_containing(p, 0, 0), PreconditionError);
  EXPECT_THROW(count_dominating_containing(p, 10, 2), PreconditionError);
  EXPECT_THROW(count_via_transitivity(path_graph(3), 1), PreconditionError);
  std::mt19937_64 rng(1);
  EXPECT_THROW(domination_polynomial(oracle::random_graph(31, 0.2, rng)), CapacityError);
}

TEST(DominationTest, GammaSets) {
  const auto pf = gamma_sets(petersen());
  EXPECT_EQ(pf.gamma, 3);
  EXPECT_EQ(pf.sets.size(), 10u);
  for (VertexSet s : pf.sets) EXPECT_TRUE(is_dominating(petersen(), s));
  EXPECT_TRUE(std::is_sorted(pf.sets.begin(), pf.sets.end()));

  const auto k4 = gamma_sets(complete_graph(4));
  EXPECT_EQ(k4.gamma, 1);
  EXPECT_EQ(k4.sets.size(), 4u);
  EXPECT_EQ(gamma_sets(cycle_graph(5)).sets.size(), 5u);
  EXPECT_EQ(domination_number(cycle_graph(5)), 2);
  EXPECT_EQ(domination_number(empty_graph(4)), 4);
}

// Direct scan, inclusion-exclusion, full sweep and the oracle agree on every
// graph with at most 7 vertices, and on random graphs of order 8.
TEST(DominationTest, CountersAgreeWithOracle) {
  std::vector<Graph> graphs;
  for (int n = 0; n <= 7; ++n) {
    for (auto& g : generate_all_graphs(n)) graphs.push_back(std::move(g));
  }
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) graphs.push_back(oracle::random_graph(8, 0.35, rng));
  for (const Graph& g : graphs) {
    const auto want = oracle::domination_coefficients(g);
    const DominationPolynomial p = domination_polynomial(g);
    for (int i = 0; i <= g.order(); ++i) {
      ASSERT_EQ(p[i], want[i]) << encode_graph6(g) << " i=" << i;
      ASSERT_EQ(count_dominating(g, i), want[i]);
      ASSERT_EQ(count_dominating_ie(g, i), want[i]);
    }
  }
}

TEST(DominationTest, SweepMatchesOracleOnLargerGraphs) {
  std::mt19937_64 rng(29);
  for (int n : {12, 14, 16}) {
    const Graph g = oracle::random_graph(n, 0.25, rng);
    const auto want = oracle::domination_coefficients(g);
    const DominationPolynomial p = domination_polynomial(g);
    for (int i = 0; i <= n; ++i) ASSERT_EQ(p[i], want[i]) << n;
  }
  // Threaded path.
  const Graph g = oracle::random_graph(22, 0.2, rng);
  const DominationPolynomial p = domination_polynomial(g);
  for (int i = 0; i <= 22; ++i) ASSERT_EQ(p[i], count_dominating(g, i)) << i;
}

TEST(DominationTest, ContainingCountsMatchOracle) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(7, 0.4, rng);
    for (Vertex v = 0; v < 7; ++v) {
      for (int i = 1; i <= 7; ++i) {
        ASSERT_EQ(count_dominating_containing(g, v, i), oracle::dominating_containing(g, v, i));
      }
    }
  }
}

// Every superset of a dominating set dominates.
TEST(DominationTest, SupersetClosure) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 1000; ++t) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const VertexSet s(rng() & VertexSet::Range(n).bits());
    const VertexSet extra(rng() & VertexSet::Range(n).bits());
    if (is_dominating(g, s)) {
      ASSERT_TRUE(is_dominating(g, s | extra));
    }
  }
}

TEST(DominationTest, TransitivityIdentityForEveryVertex) {
  for (const Graph& g : {petersen(), cycle_graph(9), prism_graph(4), complete_bipartite(3, 3),
                         complete_graph(5)}) {
    ASSERT_TRUE(is_vertex_transitive(g));
    const int n = g.order();
    for (int i = 1; i <= n; ++i) {
      const BigInt d = count_dominating(g, i);
      EXPECT_EQ(count_via_transitivity(g, i), d);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(n * count_dominating_containing(g, v, i), i * d);
      }
    }
  }
}

TEST(DominationTest, ProductLawOnTwoComponentGraphs) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const Graph a = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.4, rng);
    const Graph b = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.4, rng);
    EXPECT_EQ(domination_polynomial(disjoint_union(a, b)),
              polynomial_product(domination_polynomial(a), domination_polynomial(b)));
  }
}

TEST(DominationTest, LowestCoefficientCountsGammaSets) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.3, rng);
    const DominationPolynomial p = domination_polynomial(g);
    const GammaFamily f = gamma_sets(g);
    EXPECT_EQ(p.lowest_degree(), f.gamma);
    EXPECT_EQ(p[f.gamma], f.sets.size());
  }
}

}  // namespace
}  // namespace domipoly
