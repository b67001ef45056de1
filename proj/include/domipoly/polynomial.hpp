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

#ifndef DOMIPOLY_POLYNOMIAL_HPP_
#define DOMIPOLY_POLYNOMIAL_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "domipoly/error.hpp"
#include "json.hpp"

namespace domipoly {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// D(G, x) of an order-n graph: coeff[i] counts dominating sets of size i.
class DominationPolynomial {
 public:
  // The polynomial 1 of the order-0 graph.
  DominationPolynomial() : coeff_{1} {}

  explicit DominationPolynomial(std::vector<BigInt> coeff)
      : coeff_(std::move(coeff)) {
    if (coeff_.empty()) {
      throw PreconditionError("DominationPolynomial: empty coefficient vector");
    }
    for (const BigInt& c : coeff_) {
      if (c < 0) throw PreconditionError("DominationPolynomial: negative coefficient");
    }
  }
  DominationPolynomial(std::initializer_list<long long> coeff)
      : DominationPolynomial(std::vector<BigInt>(coeff.begin(), coeff.end())) {}

  // Graph order; the coefficient vector has order() + 1 entries.
  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  const BigInt& operator[](int i) const { return coeff_[i]; }
  const std::vector<BigInt>& coefficients() const { return coeff_; }

  // Smallest i with a nonzero coefficient, i.e. the domination number.
  int lowest_degree() const {
    for (int i = 0; i <= order(); ++i) {
      if (coeff_[i] != 0) return i;
    }
    return order();
  }

  std::vector<std::int64_t> to_int64() const {
    std::vector<std::int64_t> out;
    out.reserve(coeff_.size());
    for (const BigInt& c : coeff_) out.push_back(static_cast<std::int64_t>(c));
    return out;
  }

  // Descending powers, zero terms omitted: "x^4 + 4x^3 + 6x^2 + 4x".
  std::string to_string() const {
    std::string out;
    for (int i = order(); i >= 0; --i) {
      const BigInt& c = coeff_[i];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (c != 1 || i == 0) out += c.str();
      if (i >= 1) out += 'x';
      if (i >= 2) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const DominationPolynomial&,
                         const DominationPolynomial&) = default;
  friend bool operator<(const DominationPolynomial& a,
                        const DominationPolynomial& b) {
    return a.coeff_ < b.coeff_;
  }

 private:
  std::vector<BigInt> coeff_;
};

// Coefficient convolution. The polynomial of a disjoint union is the product
// of the polynomials of its parts.
inline DominationPolynomial polynomial_product(const DominationPolynomial& p,
                                               const DominationPolynomial& q) {
  std::vector<BigInt> out(p.order() + q.order() + 1, 0);
  for (int i = 0; i <= p.order(); ++i) {
    if (p[i] == 0) continue;
    for (int j = 0; j <= q.order(); ++j) out[i + j] += p[i] * q[j];
  }
  return DominationPolynomial(std::move(out));
}

// {"n": 4, "coeff": [0, 4, 6, 4, 1]}
inline nlohmann::json to_json(const DominationPolynomial& p) {
  return {{"n", p.order()}, {"coeff", p.to_int64()}};
}

inline DominationPolynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<BigInt> coeff;
  for (const auto& c : j.at("coeff")) coeff.emplace_back(c.get<std::int64_t>());
  DominationPolynomial p(std::move(coeff));
  if (j.contains("n") && j.at("n").get<int>() != p.order()) {
    throw PreconditionError("polynomial JSON: n does not match coefficient count");
  }
  return p;
}

}  // namespace domipoly

#endif  // DOMIPOLY_POLYNOMIAL_HPP_
