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

#ifndef DOMIPOLY_CATALOG_HPP_
#define DOMIPOLY_CATALOG_HPP_

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "domipoly/canonical.hpp"
#include "domipoly/domination.hpp"
#include "domipoly/error.hpp"
#include "domipoly/formats.hpp"
#include "domipoly/graph.hpp"
#include "domipoly/polynomial.hpp"
#include "domipoly/structure.hpp"
#include "json.hpp"

namespace domipoly {

// Isomorphism invariants stored with every catalog entry.
struct Fingerprint {
  DominationPolynomial poly;
  std::optional<int> girth;
  int triangles = 0;
  int diamonds = 0;
  int k4 = 0;
  bool connected = true;
  int orbit_count = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint compute_fingerprint(const Graph& g) {
  const SubgraphCounts c = count_subgraphs(g);
  Fingerprint f;
  f.poly = domination_polynomial(g);
  f.girth = c.girth;
  f.triangles = c.triangles;
  f.diamonds = c.diamonds;
  f.k4 = c.k4;
  f.connected = is_connected(g);
  f.orbit_count = automorphism_orbits(g).count();
  return f;
}

struct CatalogEntry {
  Graph graph;
  std::string graph6;
  Fingerprint fingerprint;
  std::optional<std::string> paper_name;
};

// Builds an entry in canonical labelling.
inline CatalogEntry make_entry(const Graph& g) {
  CatalogEntry e;
  e.graph6 = canonical_form(g);
  e.graph = parse_graph6(e.graph6);
  e.fingerprint = compute_fingerprint(e.graph);
  return e;
}

struct Catalog {
  // Generation parameters; k is -1 when the entries are not all regular of
  // one degree (e.g. a hand-written catalog file).
  int n = 0;
  int k = -1;
  std::vector<CatalogEntry> entries;

  const CatalogEntry* find_by_name(const std::string& name) const {
    for (const auto& e : entries) {
      if (e.paper_name == name) return &e;
    }
    return nullptr;
  }
};

namespace detail {

inline void sort_entries(std::vector<CatalogEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              return a.graph6 < b.graph6;
            });
}

// Backtracking over adjacency rows. Vertex v is completed before v+1 and only
// gains edges to higher vertices. Unfinished higher vertices with identical
// current neighbourhoods are interchangeable, so from each such class only a
// prefix is ever chosen. Leaves are deduplicated by canonical form.
class RegularGenerator {
 public:
  RegularGenerator(int n, int k) : n_(n), k_(k), adj_(n, 0), deg_(n, 0) {}

  std::set<std::string> run() {
    extend(0);
    return std::move(forms_);
  }

 private:
  void extend(Vertex v) {
    if (v == n_) {
      std::vector<VertexSet> adj(n_);
      for (Vertex u = 0; u < n_; ++u) adj[u] = VertexSet(adj_[u]);
      forms_.insert(canonical_form(Graph::FromAdjacency(std::move(adj))));
      return;
    }
    const int need = k_ - deg_[v];
    if (need == 0) {
      extend(v + 1);
      return;
    }
    // Classes of interchangeable candidates, in order of first member.
    std::vector<std::vector<Vertex>> classes;
    std::vector<std::uint64_t> keys;
    int available = 0;
    for (Vertex u = v + 1; u < n_; ++u) {
      if (deg_[u] >= k_) continue;
      ++available;
      auto it = std::find(keys.begin(), keys.end(), adj_[u]);
      if (it == keys.end()) {
        keys.push_back(adj_[u]);
        classes.push_back({u});
      } else {
        classes[it - keys.begin()].push_back(u);
      }
    }
    if (available < need) return;
    std::vector<Vertex> chosen;
    choose(v, classes, 0, need, chosen);
  }

  void choose(Vertex v, const std::vector<std::vector<Vertex>>& classes,
              std::size_t cls, int need, std::vector<Vertex>& chosen) {
    if (need == 0) {
      for (Vertex u : chosen) link(v, u);
      extend(v + 1);
      for (Vertex u : chosen) unlink(v, u);
      return;
    }
    if (cls == classes.size()) return;
    int rest = 0;
    for (std::size_t c = cls + 1; c < classes.size(); ++c) {
      rest += static_cast<int>(classes[c].size());
    }
    const int here = static_cast<int>(classes[cls].size());
    for (int take = std::min(need, here); take >= 0; --take) {
      if (need - take > rest) break;
      for (int i = 0; i < take; ++i) chosen.push_back(classes[cls][i]);
      choose(v, classes, cls + 1, need - take, chosen);
      chosen.resize(chosen.size() - take);
    }
  }

  void link(Vertex a, Vertex b) {
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
    ++deg_[a];
    ++deg_[b];
  }
  void unlink(Vertex a, Vertex b) {
    adj_[a] &= ~(std::uint64_t{1} << b);
    adj_[b] &= ~(std::uint64_t{1} << a);
    --deg_[a];
    --deg_[b];
  }

  int n_;
  int k_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> deg_;
  std::set<std::string> forms_;
};

}  // namespace detail

inline constexpr int kMaxGenerationOrder = 16;

// All k-regular simple graphs on n vertices up to isomorphism, connected or
// not, sorted by canonical graph6.
inline Catalog generate_regular(int n, int k) {
  if (n < 1 || n > kMaxGenerationOrder) {
    throw CapacityError("generate_regular: order must be in 1.." +
                        std::to_string(kMaxGenerationOrder));
  }
  if (k < 0 || k >= n) {
    throw PreconditionError("generate_regular: degree must satisfy 0 <= k < n");
  }
  if ((n * k) % 2 != 0) {
    throw PreconditionError("generate_regular: n*k = " + std::to_string(n * k) +
                            " is odd; no " + std::to_string(k) +
                            "-regular graph on " + std::to_string(n) +
                            " vertices exists");
  }
  Catalog c;
  c.n = n;
  c.k = k;
  for (const std::string& form : detail::RegularGenerator(n, k).run()) {
    CatalogEntry e;
    e.graph6 = form;
    e.graph = parse_graph6(form);
    e.fingerprint = compute_fingerprint(e.graph);
    c.entries.push_back(std::move(e));
  }
  detail::sort_entries(c.entries);
  return c;
}

// Every graph on n vertices up to isomorphism, as canonical graph6 strings
// in increasing order. Built by adding a vertex with every possible
// neighbourhood to each graph on n-1 vertices.
inline std::vector<std::string> generate_all_graph_forms(int n) {
  if (n < 0 || n > 10) {
    throw CapacityError("generate_all_graph_forms: order must be in 0..10");
  }
  std::set<std::string> level = {encode_graph6(empty_graph(0))};
  for (int m = 0; m < n; ++m) {
    std::set<std::string> next;
    for (const std::string& form : level) {
      const Graph g = parse_graph6(form);
      std::vector<VertexSet> base = g.adjacency();
      base.emplace_back();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<VertexSet> adj = base;
        adj[m] = VertexSet(mask);
        for (Vertex u : VertexSet(mask)) adj[u] = adj[u].with(m);
        next.insert(canonical_form(Graph::FromAdjacency(std::move(adj))));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

inline std::vector<Graph> generate_all_graphs(int n) {
  std::vector<Graph> out;
  for (const auto& form : generate_all_graph_forms(n)) out.push_back(parse_graph6(form));
  return out;
}

// ---------------------------------------------------------------------------
// Persistence: one JSON object per line,
//   {"graph6": str, "paper_name": str|null, "poly": [int...],
//    "girth": int|null, "t": int, "s": int, "connected": bool}

inline nlohmann::json to_json(const CatalogEntry& e) {
  nlohmann::json j;
  j["graph6"] = e.graph6;
  j["paper_name"] = e.paper_name ? nlohmann::json(*e.paper_name)
                                 : nlohmann::json(nullptr);
  j["poly"] = e.fingerprint.poly.to_int64();
  j["girth"] = e.fingerprint.girth ? nlohmann::json(*e.fingerprint.girth)
                                   : nlohmann::json(nullptr);
  j["t"] = e.fingerprint.diamonds;
  j["s"] = e.fingerprint.k4;
  j["connected"] = e.fingerprint.connected;
  return j;
}

inline void write_catalog(std::ostream& out, const Catalog& c) {
  for (const auto& e : c.entries) out << to_json(e).dump() << '\n';
}

inline void save_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_catalog: cannot open " + path);
  write_catalog(out, c);
  if (!out) throw Error("save_catalog: write failed for " + path);
}

inline void write_graph6_lines(std::ostream& out, const Catalog& c) {
  for (const auto& e : c.entries) out << e.graph6 << '\n';
}

// Parses and revalidates a catalog: every stored invariant is recomputed from
// the graph6 string and must match, and no two entries may be isomorphic.
// ParseError offsets are 1-based line numbers.
inline Catalog read_catalog(std::istream& in) {
  Catalog c;
  std::set<std::string> forms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CatalogEntry e;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      e.graph6 = j.at("graph6").get<std::string>();
      e.graph = parse_graph6(e.graph6);
      if (!j.at("paper_name").is_null()) {
        e.paper_name = j.at("paper_name").get<std::string>();
      }
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("catalog: ") + ex.what(), lineno);
    } catch (const ParseError& ex) {
      throw ParseError(std::string("catalog: ") + ex.what(), lineno);
    }
    e.fingerprint = compute_fingerprint(e.graph);
    const nlohmann::json expected = to_json(e);
    for (const char* key : {"poly", "girth", "t", "s", "connected"}) {
      if (!j.contains(key) || j.at(key) != expected.at(key)) {
        throw ParseError(std::string("catalog: field '") + key + "' is " +
                             (j.contains(key) ? j.at(key).dump() : "missing") +
                             ", recomputed " + expected.at(key).dump(),
                         lineno);
      }
    }
    if (!forms.insert(canonical_form(e.graph)).second) {
      throw ParseError("catalog: entry isomorphic to an earlier entry", lineno);
    }
    c.entries.push_back(std::move(e));
  }
  if (!c.entries.empty()) {
    c.n = c.entries.front().graph.order();
    c.k = c.entries.front().graph.is_regular() && c.n > 0
              ? c.entries.front().graph.degree(0)
              : -1;
    for (const auto& e : c.entries) {
      if (e.graph.order() != c.n) c.n = -1;
      if (c.k >= 0 && !e.graph.is_regular(c.k)) c.k = -1;
    }
  }
  return c;
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_catalog: cannot open " + path);
  return read_catalog(in);
}

}  // namespace domipoly

#endif  // DOMIPOLY_CATALOG_HPP_
