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

// D-equivalence: graphs are equivalent when their domination polynomials are
// equal. Uniqueness is always relative to an explicit catalog.

#ifndef DOMIPOLY_EQUIVALENCE_HPP_
#define DOMIPOLY_EQUIVALENCE_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "domipoly/canonical.hpp"
#include "domipoly/catalog.hpp"
#include "domipoly/error.hpp"
#include "domipoly/structure.hpp"
#include "json.hpp"

namespace domipoly {

struct EquivalenceClass {
  DominationPolynomial key;
  // Indices into the partitioned entry list, ordered by graph6.
  std::vector<std::size_t> members;
};

inline std::string display_name(const CatalogEntry& e) {
  return e.paper_name.value_or(e.graph6);
}

// Groups entries by exact polynomial equality. Classes are ordered by
// (gamma, d(G, gamma)), then by coefficient vector, so the result does not
// depend on input order.
inline std::vector<EquivalenceClass> partition_by_polynomial(
    std::span<const CatalogEntry> entries) {
  std::set<std::string> forms;
  for (const auto& e : entries) {
    if (!forms.insert(canonical_form(e.graph)).second) {
      throw PreconditionError("partition_by_polynomial: entries are not pairwise non-isomorphic (" +
                              e.graph6 + ")");
    }
  }
  std::map<std::vector<BigInt>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    groups[entries[i].fingerprint.poly.coefficients()].push_back(i);
  }
  std::vector<EquivalenceClass> out;
  for (auto& [coeff, members] : groups) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return entries[a].graph6 < entries[b].graph6;
    });
    out.push_back({DominationPolynomial(coeff), members});
  }
  std::sort(out.begin(), out.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
    const int ga = a.key.lowest_degree();
    const int gb = b.key.lowest_degree();
    if (ga != gb) return ga < gb;
    if (a.key[ga] != b.key[gb]) return a.key[ga] < b.key[gb];
    return a.key < b.key;
  });
  return out;
}

struct UniquenessResult {
  bool unique = false;
  // Indices (into the catalog) of other entries with the same polynomial.
  std::vector<std::size_t> witnesses;
};

namespace detail {
inline std::size_t locate_entry(const CatalogEntry& entry, const Catalog& c) {
  const std::string form = canonical_form(entry.graph);
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (c.entries[i].graph6 == form || canonical_form(c.entries[i].graph) == form) {
      return i;
    }
  }
  throw PreconditionError("entry " + entry.graph6 + " is not in the catalog");
}
}  // namespace detail

inline UniquenessResult is_unique_within(const CatalogEntry& entry, const Catalog& c) {
  const std::size_t self = detail::locate_entry(entry, c);
  UniquenessResult r;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (i != self && c.entries[i].fingerprint.poly == c.entries[self].fingerprint.poly) {
      r.witnesses.push_back(i);
    }
  }
  r.unique = r.witnesses.empty();
  return r;
}

// The two-stage comparison used to separate a graph from the rest of a
// regular catalog: first by the number of gamma-sets, then by d(G, gamma+1),
// then by the whole polynomial. Also records whether the entry is free of
// closed twins, which is what lets a regular catalog stand in for all graphs.
struct UniquenessArgument {
  std::size_t entry = 0;
  int gamma = 0;
  BigInt gamma_count = 0;
  // Entries (including `entry`) with the same gamma and gamma-set count.
  std::vector<std::size_t> gamma_ties;
  // d(G, gamma+1) for each member of gamma_ties, in the same order.
  std::vector<BigInt> next_coefficients;
  bool separated_by_next_coefficient = false;
  // Entries other than `entry` with an identical polynomial.
  std::vector<std::size_t> equivalent;
  bool unique = false;
  bool twin_free = false;
  // Degree k when the entry is k-regular, else -1.
  int regular_degree = -1;
  bool regularity_transfer_applies = false;
  std::vector<std::string> notes;
};

inline UniquenessArgument uniqueness_argument(const CatalogEntry& entry, const Catalog& c) {
  UniquenessArgument a;
  a.entry = detail::locate_entry(entry, c);
  const CatalogEntry& self = c.entries[a.entry];
  const auto& p = self.fingerprint.poly;
  a.gamma = p.lowest_degree();
  a.gamma_count = p[a.gamma];
  const int next = std::min(a.gamma + 1, p.order());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& q = c.entries[i].fingerprint.poly;
    if (q.order() == p.order() && q.lowest_degree() == a.gamma && q[a.gamma] == a.gamma_count) {
      a.gamma_ties.push_back(i);
      a.next_coefficients.push_back(q[next]);
    }
  }
  a.separated_by_next_coefficient = true;
  for (std::size_t t = 0; t < a.gamma_ties.size(); ++t) {
    if (a.gamma_ties[t] != a.entry && a.next_coefficients[t] == p[next]) {
      a.separated_by_next_coefficient = false;
    }
  }
  a.equivalent = is_unique_within(self, c).witnesses;
  a.unique = a.equivalent.empty();

  a.twin_free = !has_closed_twins(self.graph).has_value();
  if (self.graph.is_regular() && self.graph.order() > 0) {
    a.regular_degree = self.graph.degree(0);
  }
  a.regularity_transfer_applies = a.twin_free && a.regular_degree >= 0;
  if (!a.twin_free) {
    a.notes.push_back("closed twins present: regularity transfer does not apply, so uniqueness "
                      "holds only relative to this catalog");
  }
  if (a.gamma_ties.size() > 1 && !a.separated_by_next_coefficient) {
    a.notes.push_back("d(G," + std::to_string(next) +
                      ") does not separate the gamma-set ties; full polynomials decide");
  }
  return a;
}

// ---------------------------------------------------------------------------
// Reports.

inline nlohmann::json to_json(const std::vector<EquivalenceClass>& classes,
                              std::span<const CatalogEntry> entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& cls : classes) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t m : cls.members) {
      members.push_back({{"graph6", entries[m].graph6},
                         {"paper_name", entries[m].paper_name
                                            ? nlohmann::json(*entries[m].paper_name)
                                            : nlohmann::json(nullptr)}});
    }
    out.push_back({{"poly", to_json(cls.key)},
                   {"size", cls.members.size()},
                   {"members", members}});
  }
  return out;
}

// One line per class in partition order: "[G6] = {G6, G10}  x^10 + ...".
inline std::string class_table(const std::vector<EquivalenceClass>& classes,
                               std::span<const CatalogEntry> entries) {
  std::ostringstream out;
  std::size_t pairs = 0;
  for (const auto& cls : classes) {
    if (cls.members.size() > 1) ++pairs;
  }
  out << classes.size() << " classes, " << pairs << " with more than one member\n";
  for (const auto& cls : classes) {
    out << '[' << display_name(entries[cls.members.front()]) << "] = {";
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      if (i) out << ", ";
      out << display_name(entries[cls.members[i]]);
    }
    out << "}  " << cls.key.to_string() << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const UniquenessArgument& a, const Catalog& c) {
  nlohmann::json ties = nlohmann::json::array();
  for (std::size_t t = 0; t < a.gamma_ties.size(); ++t) {
    ties.push_back({{"graph", display_name(c.entries[a.gamma_ties[t]])},
                    {"next_coefficient", static_cast<std::int64_t>(a.next_coefficients[t])}});
  }
  nlohmann::json equivalent = nlohmann::json::array();
  for (std::size_t i : a.equivalent) equivalent.push_back(display_name(c.entries[i]));
  return {{"graph", display_name(c.entries[a.entry])},
          {"gamma", a.gamma},
          {"gamma_count", static_cast<std::int64_t>(a.gamma_count)},
          {"gamma_ties", ties},
          {"separated_by_next_coefficient", a.separated_by_next_coefficient},
          {"equivalent", equivalent},
          {"unique", a.unique},
          {"twin_free", a.twin_free},
          {"regular_degree", a.regular_degree},
          {"regularity_transfer_applies", a.regularity_transfer_applies},
          {"notes", a.notes}};
}

}  // namespace domipoly

#endif  // DOMIPOLY_EQUIVALENCE_HPP_
