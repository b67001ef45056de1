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

// Generates the cubic graphs on 10 vertices and shows that the Petersen graph
// is the only one with its domination polynomial.

#include <iostream>

#include "domipoly/catalog.hpp"
#include "domipoly/domination.hpp"
#include "domipoly/equivalence.hpp"
#include "domipoly/structure.hpp"

int main() {
  using namespace domipoly;
  const Graph p = petersen();
  const DominationPolynomial d = domination_polynomial(p);
  std::cout << "D(P,x) = " << d.to_string() << '\n';

  const MinDegreeInference m = infer_min_degree(d);
  std::cout << "min degree read off D: " << m.delta << " (l = " << m.l << ")\n";

  const Catalog cubic = generate_regular(10, 3);
  std::cout << cubic.entries.size() << " cubic graphs on 10 vertices\n";

  const CatalogEntry entry = make_entry(p);
  const UniquenessArgument a = uniqueness_argument(entry, cubic);
  std::cout << "gamma = " << a.gamma << ", gamma-sets = " << a.gamma_count << '\n';
  for (std::size_t t = 0; t < a.gamma_ties.size(); ++t) {
    std::cout << "  tie " << cubic.entries[a.gamma_ties[t]].graph6
              << "  d(G," << a.gamma + 1 << ") = " << a.next_coefficients[t] << '\n';
  }
  std::cout << (a.unique ? "unique" : "not unique") << " among cubic graphs; "
            << (a.regularity_transfer_applies ? "no closed twins, so any graph with this "
                                                "polynomial is cubic\n"
                                              : "closed twins present\n");
  return a.unique ? 0 : 1;
}
