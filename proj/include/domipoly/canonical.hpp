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

// Canonical labelling by individualisation-refinement.
//
// The search tree is the usual one: refine the colouring to an equitable
// partition, pick the first non-singleton cell, and branch on which of its
// vertices is individualised. Every leaf is a discrete colouring, i.e. a
// relabelling; the canonical graph is the lexicographically smallest
// relabelled adjacency over all leaves. Two prunings keep the tree small:
//
//  * orbit pruning: a child is skipped when an automorphism found so far that
//    fixes the current path pointwise maps it onto an explored sibling;
//  * back-jumping: when a leaf reproduces the best graph through an
//    automorphism that carries the current path onto the best path, the rest
//    of the current subtree is an image of an explored one and is abandoned.
//
// Both only skip subtrees whose leaves are images of leaves already seen, so
// the minimum is unaffected.

#ifndef DOMIPOLY_CANONICAL_HPP_
#define DOMIPOLY_CANONICAL_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "domipoly/error.hpp"
#include "domipoly/formats.hpp"
#include "domipoly/graph.hpp"

namespace domipoly {

namespace detail {

// Replaces arbitrary colour values by their dense ranks 0..k-1; returns k.
inline int normalize_colors(std::vector<int>& color) {
  std::vector<int> values = color;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int& c : color) {
    c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) -
                         values.begin());
  }
  return static_cast<int>(values.size());
}

// Colour refinement to the coarsest equitable partition finer than `color`.
// `color` must hold dense ranks; cells keep their relative order and split
// cells are ordered by their sorted multiset of neighbour colours, so the
// result is a labelling-invariant function of (g, color). Returns the number
// of cells.
inline int refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  int cells = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  while (cells < n) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(color[v]);
      for (Vertex u : g.neighbors(v)) s.push_back(color[u]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      color[order[i]] = rank;
    }
    if (rank + 1 == cells) break;
    cells = rank + 1;
  }
  return cells;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(std::vector<int> color) {
    normalize_colors(color);
    refine(g_, color);
    search(std::move(color));
  }

  const std::vector<Vertex>& best_labeling() const { return best_perm_; }
  const std::vector<std::uint64_t>& best_rows() const { return best_rows_; }
  std::vector<Permutation>& automorphisms() { return autos_; }

 private:
  void search(std::vector<int> color) {
    const int depth = static_cast<int>(path_.size());
    int target = -1;
    {
      std::vector<int> count(n_, 0);
      for (int c : color) ++count[c];
      for (int c = 0; c < n_; ++c) {
        if (count[c] > 1) {
          target = c;
          break;
        }
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }

    std::vector<Vertex> explored;
    std::size_t autos_seen = static_cast<std::size_t>(-1);
    UnionFind orbits(n_);
    for (Vertex u = 0; u < n_; ++u) {
      if (color[u] != target) continue;
      if (autos_seen != autos_.size()) {
        orbits = stabilizer_orbits();
        autos_seen = autos_.size();
      }
      const bool redundant =
          std::any_of(explored.begin(), explored.end(),
                      [&](Vertex w) { return orbits.find(w) == orbits.find(u); });
      if (redundant) continue;
      explored.push_back(u);

      std::vector<int> child = color;
      for (int& c : child) {
        if (c > target) ++c;
      }
      for (Vertex w = 0; w < n_; ++w) {
        if (w != u && color[w] == target) child[w] = target + 1;
      }
      refine(g_, child);
      path_.push_back(u);
      search(std::move(child));
      path_.pop_back();

      if (jump_to_ >= 0) {
        if (depth > jump_to_) return;
        jump_to_ = -1;
      }
    }
  }

  // Orbits of the automorphisms found so far that fix the current path.
  UnionFind stabilizer_orbits() {
    UnionFind uf(n_);
    for (const Permutation& a : autos_) {
      bool fixes = true;
      for (Vertex v : path_) {
        if (a(v) != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) uf.unite(v, a(v));
    }
    return uf;
  }

  void leaf(const std::vector<int>& perm) {
    std::vector<std::uint64_t> rows(n_);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t bits = 0;
      for (Vertex u : g_.neighbors(v)) bits |= std::uint64_t{1} << perm[u];
      rows[perm[v]] = bits;
    }
    if (!have_best_ || rows < best_rows_) {
      have_best_ = true;
      best_rows_ = std::move(rows);
      best_perm_ = perm;
      best_path_ = path_;
      return;
    }
    if (rows != best_rows_) return;

    // Same relabelled graph: theta(v) = best^{-1}(perm(v)) is an automorphism.
    std::vector<Vertex> best_inv(n_);
    for (Vertex v = 0; v < n_; ++v) best_inv[best_perm_[v]] = v;
    std::vector<Vertex> theta(n_);
    for (Vertex v = 0; v < n_; ++v) theta[v] = best_inv[perm[v]];
    Permutation aut(std::move(theta));
    if (!g_.is_automorphism(aut)) {
      throw InternalError("canonical search produced a non-automorphism");
    }

    std::size_t common = 0;
    while (common < path_.size() && common < best_path_.size() &&
           path_[common] == best_path_[common]) {
      ++common;
    }
    bool maps_path = common < path_.size() && common < best_path_.size();
    for (std::size_t j = 0; maps_path && j <= common; ++j) {
      maps_path = aut(path_[j]) == best_path_[j];
    }
    autos_.push_back(std::move(aut));
    if (maps_path) jump_to_ = static_cast<int>(common);
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_perm_;
  std::vector<Vertex> best_path_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<Permutation> autos_;
  bool have_best_ = false;
  int jump_to_ = -1;
};

}  // namespace detail

struct CanonicalLabeling {
  // labeling(v) is v's position in the canonical graph.
  Permutation labeling;
  // graph6 of g.relabeled(labeling), followed for coloured input by
  // "|" and the colour-class sizes in colour order.
  std::string form;
  // Automorphisms met during the search (not necessarily generators of the
  // whole group).
  std::vector<Permutation> automorphisms;
};

// Canonical labelling of g, optionally of the vertex-coloured graph
// (g, colors): only colour-preserving relabellings are considered, and
// colour classes are placed in increasing colour order.
inline CanonicalLabeling canonical_labeling(const Graph& g,
                                            std::span<const int> colors = {}) {
  const int n = g.order();
  std::vector<int> color(n, 0);
  const bool colored = !colors.empty();
  if (colored) {
    if (static_cast<int>(colors.size()) != n) {
      throw PreconditionError("canonical_labeling: colour vector size mismatch");
    }
    color.assign(colors.begin(), colors.end());
  }
  detail::CanonicalSearch search(g);
  search.run(color);

  CanonicalLabeling out;
  out.labeling = n == 0 ? Permutation() : Permutation(search.best_labeling());
  out.form = encode_graph6(g.relabeled(out.labeling));
  if (colored) {
    detail::normalize_colors(color);
    std::vector<int> sizes;
    for (int c : color) {
      if (c >= static_cast<int>(sizes.size())) sizes.resize(c + 1, 0);
      ++sizes[c];
    }
    out.form += '|';
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i) out.form += ',';
      out.form += std::to_string(sizes[i]);
    }
  }
  out.automorphisms = std::move(search.automorphisms());
  return out;
}

// A graph6 string that is equal for two graphs iff they are isomorphic. It
// is itself a valid graph6 line (of the canonically labelled graph).
inline std::string canonical_form(const Graph& g) {
  return canonical_labeling(g).form;
}

inline Graph canonical_graph(const Graph& g) {
  return g.relabeled(canonical_labeling(g).labeling);
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.size() == h.size() &&
         canonical_form(g) == canonical_form(h);
}

struct AutomorphismOrbits {
  // Orbits in increasing order of their smallest vertex; members ascending.
  std::vector<std::vector<Vertex>> orbits;
  // orbit_of[v] indexes `orbits`.
  std::vector<int> orbit_of;
  // Automorphisms whose union-find closure yields exactly `orbits`.
  std::vector<Permutation> generators;

  int count() const { return static_cast<int>(orbits.size()); }
};

// Vertex orbits of Aut(g). Vertices u and w share an orbit iff the graph with
// u individualised is isomorphic (as a coloured graph) to the graph with w
// individualised; the two canonical labellings then give an explicit
// automorphism carrying w to u.
inline AutomorphismOrbits automorphism_orbits(const Graph& g) {
  const int n = g.order();
  AutomorphismOrbits out;
  CanonicalLabeling plain = canonical_labeling(g);
  out.generators = std::move(plain.automorphisms);

  detail::UnionFind uf(n);
  for (const Permutation& a : out.generators) {
    for (Vertex v = 0; v < n; ++v) uf.unite(v, a(v));
  }

  std::map<std::string, std::pair<Vertex, Permutation>> seen;
  for (Vertex v = 0; v < n; ++v) {
    if (uf.find(v) != v) continue;
    std::vector<int> color(n, 1);
    color[v] = 0;
    CanonicalLabeling lab = canonical_labeling(g, color);
    auto it = seen.find(lab.form);
    if (it == seen.end()) {
      seen.emplace(lab.form, std::pair{v, lab.labeling});
      continue;
    }
    const auto& [rep, rep_labeling] = it->second;
    Permutation theta = rep_labeling.inverse().compose(lab.labeling);
    if (theta(v) != rep || !g.is_automorphism(theta)) {
      throw InternalError("automorphism_orbits: inconsistent witness");
    }
    uf.unite(rep, v);
    out.generators.push_back(std::move(theta));
  }

  out.orbit_of.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (out.orbit_of[root] < 0) {
      out.orbit_of[root] = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[v] = out.orbit_of[root];
    out.orbits[out.orbit_of[v]].push_back(v);
  }
  return out;
}

inline bool is_vertex_transitive(const Graph& g) {
  return g.order() > 0 && automorphism_orbits(g).count() == 1;
}

}  // namespace domipoly

#endif  // DOMIPOLY_CANONICAL_HPP_
