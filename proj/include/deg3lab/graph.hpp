#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deg3lab/errors.hpp"

namespace deg3lab {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Self-loops and parallel edges are rejected on insertion, so adjacency is
/// always symmetric and the edge count is half the degree sum.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_order(n))) {}

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_; }
  bool empty() const { return adj_.empty(); }

  int degree(Vertex v) const { return static_cast<int>(adj_[index(v)].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[index(v)]; }

  bool has_edge(Vertex u, Vertex v) const {
    if (!valid(u) || !valid(v)) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  void add_edge(Vertex u, Vertex v) {
    detail::require(valid(u) && valid(v), "edge (" + std::to_string(u) + "," +
                                              std::to_string(v) + ") out of range");
    detail::require(u != v, "self-loop at vertex " + std::to_string(u));
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto pos = std::lower_bound(au.begin(), au.end(), v);
    detail::require(pos == au.end() || *pos != v, "parallel edge (" + std::to_string(u) +
                                                      "," + std::to_string(v) + ")");
    au.insert(pos, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  int min_degree() const {
    int best = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      const int d = static_cast<int>(adj_[v].size());
      if (v == 0 || d < best) best = d;
    }
    return best;
  }

  std::vector<int> degrees() const {
    std::vector<int> out(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) out[v] = static_cast<int>(adj_[v].size());
    return out;
  }

  /// Subgraph induced by `vertices`; vertex vertices[t] becomes t.
  Graph induced(std::span<const Vertex> vertices) const {
    std::vector<int> where(adj_.size(), -1);
    for (std::size_t t = 0; t < vertices.size(); ++t) {
      detail::require(valid(vertices[t]), "induced: vertex out of range");
      detail::require(where[static_cast<std::size_t>(vertices[t])] < 0,
                      "induced: repeated vertex " + std::to_string(vertices[t]));
      where[static_cast<std::size_t>(vertices[t])] = static_cast<int>(t);
    }
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t t = 0; t < vertices.size(); ++t) {
      for (Vertex w : neighbors(vertices[t])) {
        const int s = where[static_cast<std::size_t>(w)];
        if (s > static_cast<int>(t)) h.add_edge(static_cast<int>(t), s);
      }
    }
    return h;
  }

  /// G - v, with the remaining vertices relabeled in increasing order.
  Graph without_vertex(Vertex v) const {
    std::vector<Vertex> keep;
    keep.reserve(adj_.size());
    for (Vertex w = 0; w < order(); ++w) {
      if (w != v) keep.push_back(w);
    }
    return induced(keep);
  }

  Graph without_edge(Vertex u, Vertex v) const {
    detail::require(has_edge(u, v), "without_edge: no edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
    Graph h(order());
    for (const Edge& e : edges()) {
      if (!(e.u == std::min(u, v) && e.v == std::max(u, v))) h.add_edge(e.u, e.v);
    }
    return h;
  }

  /// Image of this graph under the vertex bijection `perm` (v -> perm[v]).
  Graph relabeled(std::span<const Vertex> perm) const {
    detail::require(perm.size() == adj_.size(), "relabeled: permutation size mismatch");
    Graph h(order());
    for (const Edge& e : edges()) {
      h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    }
    return h;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    detail::require(n >= 0, "graph order must be non-negative");
    return n;
  }
  bool valid(Vertex v) const { return v >= 0 && v < order(); }
  std::size_t index(Vertex v) const {
    detail::require(valid(v), "vertex " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

/// Cycle C_n on 0..n-1.
inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle_graph needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// Path P_n on 0..n-1.
inline Graph path_graph(int n) {
  detail::require(n >= 1, "path_graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

/// Whether every vertex is reachable from vertex 0 (true for the empty graph).
inline bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

/// Calls fn(graph) for every labeled graph on n vertices with exactly m
/// edges, in lexicographic order of edge subsets of K_n.
template <typename Fn>
void for_each_graph(int n, int m, Fn&& fn) {
  const auto all = complete_graph(n).edges();
  const int total = static_cast<int>(all.size());
  if (m < 0 || m > total) return;
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Graph g(n);
    for (int idx : pick) g.add_edge(all[static_cast<std::size_t>(idx)].u,
                                    all[static_cast<std::size_t>(idx)].v);
    fn(static_cast<const Graph&>(g));
    int pos = m - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == total - m + pos) --pos;
    if (pos < 0) return;
    ++pick[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < m; ++t) {
      pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
}

}  // namespace deg3lab
