#pragma once

// 3-cores and degree 3-criticality.
//
// A graph on n vertices is degree 3-critical when it has 2n - 2 edges and no
// proper induced subgraph of minimum degree 3.  Every induced subgraph of
// minimum degree >= 3 that avoids v lies inside the 3-core of G - v, so the
// property reduces to: core(G) = G and core(G - v) is empty for every v.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deg3lab/errors.hpp"
#include "deg3lab/graph.hpp"

namespace deg3lab {

namespace detail {

// Repeatedly deletes vertices of degree <= 2.  `alive` marks the starting
// vertex set and is updated in place.
inline void peel_to_three_core(const Graph& g, std::vector<char>& alive) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<int> deg(n, 0);
  std::vector<Vertex> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) deg[v] += alive[static_cast<std::size_t>(w)];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && deg[v] < 3) {
      alive[v] = 0;
      stack.push_back(static_cast<Vertex>(v));
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (alive[wi] && --deg[wi] < 3) {
        alive[wi] = 0;
        stack.push_back(w);
      }
    }
  }
}

inline std::vector<Vertex> alive_list(const std::vector<char>& alive) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < alive.size(); ++v) {
    if (alive[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace detail

/// Vertices of the 3-core (maximal induced subgraph of minimum degree >= 3),
/// ascending.  Empty when no such subgraph exists.
inline std::vector<Vertex> three_core_vertices(const Graph& g) {
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  detail::peel_to_three_core(g, alive);
  return detail::alive_list(alive);
}

/// Vertices of the 3-core of G - v, in the labels of G.
inline std::vector<Vertex> three_core_vertices_without(const Graph& g, Vertex v) {
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  alive[static_cast<std::size_t>(v)] = 0;
  detail::peel_to_three_core(g, alive);
  return detail::alive_list(alive);
}

/// The 3-core as a graph, core vertices relabeled in increasing order.
inline Graph three_core(const Graph& g) { return g.induced(three_core_vertices(g)); }

namespace detail {

// For a graph with minimum degree >= 3, deleting v and peeling is a threshold
// cascade: u falls once deg(u) - 2 of its neighbours have fallen.  Degree-3
// vertices fall with their first fallen neighbour, so each connected block of
// degree-3 vertices falls as a unit.  The cascade runs on those units.
class SingleDeletionCascade {
 public:
  explicit SingleDeletionCascade(const Graph& g) : unit_of_(static_cast<std::size_t>(g.order()), -1) {
    const int n = g.order();
    for (Vertex s = 0; s < n; ++s) {
      if (unit_of_[static_cast<std::size_t>(s)] >= 0) continue;
      const int id = static_cast<int>(threshold_.size());
      unit_of_[static_cast<std::size_t>(s)] = id;
      if (g.degree(s) > 3) {
        threshold_.push_back(g.degree(s) - 2);
        continue;
      }
      threshold_.push_back(1);
      std::vector<Vertex> stack{s};
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
          if (g.degree(w) == 3 && unit_of_[static_cast<std::size_t>(w)] < 0) {
            unit_of_[static_cast<std::size_t>(w)] = id;
            stack.push_back(w);
          }
        }
      }
    }
    adj_.resize(threshold_.size());
    for (const Edge& e : g.edges()) {
      const int a = unit_of_[static_cast<std::size_t>(e.u)];
      const int b = unit_of_[static_cast<std::size_t>(e.v)];
      if (a != b) {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
      }
    }
    verdict_.assign(threshold_.size(), -1);
  }

  /// Whether deleting v collapses the whole graph.
  bool collapses_without(Vertex v) {
    const int seed = unit_of_[static_cast<std::size_t>(v)];
    auto& cached = verdict_[static_cast<std::size_t>(seed)];
    if (cached < 0) cached = run(seed) ? 1 : 0;
    return cached == 1;
  }

 private:
  bool run(int seed) const {
    const std::size_t units = threshold_.size();
    std::vector<int> hits(units, 0);
    std::vector<char> fallen(units, 0);
    std::vector<int> queue{seed};
    fallen[static_cast<std::size_t>(seed)] = 1;
    std::size_t head = 0;
    while (head < queue.size()) {
      const int a = queue[head++];
      for (int b : adj_[static_cast<std::size_t>(a)]) {
        const auto bi = static_cast<std::size_t>(b);
        if (!fallen[bi] && ++hits[bi] >= threshold_[bi]) {
          fallen[bi] = 1;
          queue.push_back(b);
        }
      }
    }
    return queue.size() == units;
  }

  std::vector<int> unit_of_;
  std::vector<int> threshold_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> verdict_;
};

}  // namespace detail

/// A proper subgraph of minimum degree >= 3: either the subgraph induced by
/// `vertices` (a proper subset), or, when `deleted_edge` is set, the spanning
/// subgraph G minus that edge.
struct ProperSubgraphWitness {
  std::vector<Vertex> vertices;
  std::optional<Edge> deleted_edge;
};

/// Some proper induced subgraph of minimum degree >= 3, if one exists:
/// the 3-core of G - v for the smallest v where it is non-empty.
inline std::optional<std::vector<Vertex>> find_proper_induced_min_degree3(const Graph& g) {
  const auto core = three_core_vertices(g);
  if (core.empty()) return std::nullopt;
  if (static_cast<int>(core.size()) < g.order()) return core;
  detail::SingleDeletionCascade cascade(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!cascade.collapses_without(v)) return three_core_vertices_without(g, v);
  }
  return std::nullopt;
}

inline bool is_degree3_critical(const Graph& g) {
  const long long n = g.order();
  if (n == 0 || static_cast<long long>(g.edge_count()) != 2 * n - 2) return false;
  if (static_cast<long long>(three_core_vertices(g).size()) != n) return false;
  return !find_proper_induced_min_degree3(g).has_value();
}

/// Any proper (not necessarily induced) subgraph of minimum degree >= 3.
///
/// Such a subgraph either misses a vertex v, and then lives in the 3-core of
/// G - v, or spans G and misses an edge uv, which needs d(u), d(v) >= 4 and
/// minimum degree >= 3 overall.
inline std::optional<ProperSubgraphWitness> find_proper_subgraph_min_degree3(const Graph& g) {
  if (auto induced = find_proper_induced_min_degree3(g)) {
    return ProperSubgraphWitness{std::move(*induced), std::nullopt};
  }
  if (g.empty() || g.min_degree() < 3) return std::nullopt;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) >= 4 && g.degree(e.v) >= 4) {
      std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
      for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
      return ProperSubgraphWitness{std::move(all), e};
    }
  }
  return std::nullopt;
}

inline bool has_proper_subgraph_min_degree3(const Graph& g) {
  return find_proper_subgraph_min_degree3(g).has_value();
}

/// Re-checks a witness against g: proper, and minimum degree >= 3.
inline bool verify_proper_subgraph_witness(const Graph& g, const ProperSubgraphWitness& w) {
  if (w.vertices.empty()) return false;
  Graph h = g.induced(w.vertices);
  if (w.deleted_edge) {
    if (static_cast<int>(w.vertices.size()) != g.order()) return false;
    std::vector<Vertex> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 0; t < sorted.size(); ++t) {
      if (sorted[t] != static_cast<Vertex>(t)) return false;
    }
    if (!g.has_edge(w.deleted_edge->u, w.deleted_edge->v)) return false;
    h = g.without_edge(w.deleted_edge->u, w.deleted_edge->v);
  } else if (static_cast<int>(w.vertices.size()) >= g.order()) {
    return false;
  }
  return h.min_degree() >= 3;
}

/// Vertex ordering x_1..x_n with forward degrees d+(x_i) = |N(x_i) ∩ {x_j : j > i}|.
struct CriticalOrdering {
  std::vector<Vertex> order;
  std::vector<int> forward_degrees;
};

inline std::vector<int> forward_degrees(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<int> out(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      if (pos[static_cast<std::size_t>(w)] > static_cast<int>(i)) ++out[i];
    }
  }
  return out;
}

/// Whether forward degrees read 3, 2, ..., 2, 1, 0.
inline bool has_critical_pattern(const std::vector<int>& fwd) {
  const std::size_t n = fwd.size();
  if (n < 4) return false;
  if (fwd[0] != 3 || fwd[n - 2] != 1 || fwd[n - 1] != 0) return false;
  for (std::size_t i = 1; i + 2 < n; ++i) {
    if (fwd[i] != 2) return false;
  }
  return true;
}

/// Greedy minimum-degree peeling order of a degree 3-critical graph (ties to
/// the smallest label).  Forward degrees come out as 3, 2, ..., 2, 1, 0.
/// For n >= 7 the last four vertices are rearranged so that x_n has degree
/// at least 4: v is the smallest-label vertex among them with degree >= 4 in
/// G[x_{n-5}..x_n], x'_{n-3} the smallest-label other vertex of degree 2 in
/// G[x_{n-3}..x_n], and the remaining two follow in label order.
inline CriticalOrdering critical_ordering(const Graph& g) {
  detail::require(is_degree3_critical(g), "critical_ordering: graph is not degree 3-critical");
  const int n = g.order();

  std::vector<int> deg = g.degrees();
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) queue.emplace(deg[static_cast<std::size_t>(v)], v);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (removed[wi]) continue;
      queue.erase({deg[wi], w});
      queue.emplace(--deg[wi], w);
    }
  }

  if (n >= 7) {
    const auto nn = static_cast<std::size_t>(n);
    const std::vector<Vertex> last6(order.end() - 6, order.end());
    const std::vector<Vertex> last4(order.end() - 4, order.end());
    auto degree_within = [&](Vertex v, const std::vector<Vertex>& set) {
      int d = 0;
      for (Vertex w : set) d += g.has_edge(v, w) ? 1 : 0;
      return d;
    };
    std::optional<Vertex> hub;
    for (Vertex v : last4) {
      if (degree_within(v, last6) >= 4 && (!hub || v < *hub)) hub = v;
    }
    std::optional<Vertex> low;
    for (Vertex v : last4) {
      if (hub && v != *hub && degree_within(v, last4) == 2 && (!low || v < *low)) low = v;
    }
    if (!hub || !low) throw std::logic_error("critical_ordering: last-six rearrangement failed");
    std::vector<Vertex> rest;
    for (Vertex v : last4) {
      if (v != *hub && v != *low) rest.push_back(v);
    }
    std::sort(rest.begin(), rest.end());
    order[nn - 4] = *low;
    order[nn - 3] = rest[0];
    order[nn - 2] = rest[1];
    order[nn - 1] = *hub;
  }

  CriticalOrdering out{order, forward_degrees(g, order)};
  if (!has_critical_pattern(out.forward_degrees) ||
      (n >= 7 && g.degree(out.order.back()) < 4)) {
    throw std::logic_error("critical_ordering: forward-degree pattern violated");
  }
  return out;
}

}  // namespace deg3lab
