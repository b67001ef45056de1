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

#ifndef DOMIPOLY_GRAPH_HPP_
#define DOMIPOLY_GRAPH_HPP_

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domipoly/error.hpp"
#include "domipoly/vertex_set.hpp"

namespace domipoly {

using Edge = std::pair<Vertex, Vertex>;

// A bijection on {0..n-1}; image[v] is where v goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Vertex v : image_) {
      if (v < 0 || v >= static_cast<Vertex>(image_.size()) || seen[v]) {
        throw PreconditionError("Permutation: image is not a bijection");
      }
      seen[v] = true;
    }
  }

  static Permutation Identity(int n) {
    std::vector<Vertex> image(n);
    for (int i = 0; i < n; ++i) image[i] = i;
    return Permutation(std::move(image));
  }

  int size() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<Vertex> inv(image_.size());
    for (std::size_t v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
    return Permutation(std::move(inv));
  }

  // (this ∘ other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const {
    std::vector<Vertex> out(image_.size());
    for (std::size_t v = 0; v < image_.size(); ++v) {
      out[v] = image_[other.image_[v]];
    }
    return Permutation(std::move(out));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

// Simple undirected graph of order 0..62 stored as open-neighbourhood masks.
// Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges are collapsed; loops
  // and out-of-range endpoints are rejected.
  Graph(int n, std::span<const Edge> edges) : n_(n), adj_(CheckOrder(n)) {
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw PreconditionError("Graph: edge endpoint out of range");
      }
      if (u == v) throw PreconditionError("Graph: self-loop");
      adj_[u] = adj_[u].with(v);
      adj_[v] = adj_[v].with(u);
    }
  }
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Builds a graph from open neighbourhoods, validating symmetry and range.
  static Graph FromAdjacency(std::vector<VertexSet> adj) {
    const int n = static_cast<int>(adj.size());
    Graph g;
    g.n_ = n;
    CheckOrder(n);
    const VertexSet all = VertexSet::Range(n);
    for (Vertex v = 0; v < n; ++v) {
      if (!adj[v].is_subset_of(all)) {
        throw PreconditionError("Graph: neighbour index out of range");
      }
      if (adj[v].contains(v)) throw PreconditionError("Graph: self-loop");
      for (Vertex u : adj[v]) {
        if (!adj[u].contains(v)) {
          throw PreconditionError("Graph: adjacency is not symmetric");
        }
      }
    }
    g.adj_ = std::move(adj);
    return g;
  }

  int order() const { return n_; }
  int size() const {
    int twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::Range(n_); }

  // N(v).
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  // N[v] = N(v) ∪ {v}.
  VertexSet closed_neighbors(Vertex v) const { return adj_[v].with(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  const std::vector<VertexSet>& adjacency() const { return adj_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  int min_degree() const {
    int d = n_;
    for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
  }
  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  bool is_regular(int k) const {
    for (Vertex v = 0; v < n_; ++v) {
      if (degree(v) != k) return false;
    }
    return true;
  }
  bool is_regular() const { return n_ == 0 || is_regular(degree(0)); }

  // Vertex v of this graph becomes vertex p(v) of the result.
  Graph relabeled(const Permutation& p) const {
    if (p.size() != n_) {
      throw PreconditionError("Graph::relabeled: permutation size mismatch");
    }
    std::vector<VertexSet> adj(n_);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t bits = 0;
      for (Vertex u : adj_[v]) bits |= std::uint64_t{1} << p(u);
      adj[p(v)] = VertexSet(bits);
    }
    Graph g;
    g.n_ = n_;
    g.adj_ = std::move(adj);
    return g;
  }

  // True iff p maps every edge to an edge (and hence non-edges to non-edges).
  bool is_automorphism(const Permutation& p) const {
    if (p.size() != n_) return false;
    return relabeled(p) == *this;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::vector<VertexSet> CheckOrder(int n) {
    if (n < 0 || n > kMaxOrder) {
      throw CapacityError("Graph: order " + std::to_string(n) +
                          " outside 0.." + std::to_string(kMaxOrder));
    }
    return std::vector<VertexSet>(n);
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// N[S] = ∪_{v ∈ S} N[v].
inline VertexSet closed_neighborhood_set(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

// Induced subgraph on `keep`; vertex keep[i] becomes vertex i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex u : g.neighbors(keep[i])) {
      if (index[u] > static_cast<int>(i)) edges.emplace_back(i, index[u]);
    }
  }
  return Graph(static_cast<int>(keep.size()), edges);
}

struct Component {
  Graph graph;
  // to_parent[i] is the index in the original graph of component vertex i.
  std::vector<Vertex> to_parent;
};

// Connected components, ordered by their smallest original vertex.
inline std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::Singleton(unseen.first());
    for (;;) {
      const VertexSet grown = closed_neighborhood_set(g, comp);
      if (grown == comp) break;
      comp = grown;
    }
    unseen = unseen - comp;
    std::vector<Vertex> members = comp.to_vector();
    out.push_back({induced_subgraph(g, members), std::move(members)});
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// Disjoint union; h's vertices are shifted past g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) {
    edges.emplace_back(u + g.order(), v + g.order());
  }
  return Graph(g.order() + h.order(), edges);
}

// Named constructions.

inline Graph empty_graph(int n) { return Graph(n, std::span<const Edge>()); }

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

// K_{a,b}: parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

// K_{1,k} with centre 0.
inline Graph star_graph(int k) { return complete_bipartite(1, k); }

// C_k × K_2: two k-cycles {0..k-1}, {k..2k-1} joined by spokes i -- i+k.
inline Graph prism_graph(int k) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) {
    edges.emplace_back(v, (v + 1) % k);
    edges.emplace_back(k + v, k + (v + 1) % k);
    edges.emplace_back(v, k + v);
  }
  return Graph(2 * k, edges);
}

// Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets of
// a 5-set, adjacent iff disjoint.
inline Graph petersen() {
  std::vector<std::uint32_t> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.push_back((1u << a) | (1u << b));
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = u + 1; v < 10; ++v) {
      if ((pairs[u] & pairs[v]) == 0) edges.emplace_back(u, v);
    }
  }
  return Graph(10, edges);
}

}  // namespace domipoly

#endif  // DOMIPOLY_GRAPH_HPP_
