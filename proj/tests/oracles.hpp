#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "deg3lab/graph.hpp"
#include "deg3lab/trees.hpp"

namespace oracle {

using deg3lab::Edge;
using deg3lab::Graph;
using deg3lab::LengthSet;
using deg3lab::Tree;
using deg3lab::Vertex;

// Adjacency bitmasks, n <= 32.
inline std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> m(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    m[static_cast<std::size_t>(e.u)] |= 1U << e.v;
    m[static_cast<std::size_t>(e.v)] |= 1U << e.u;
  }
  return m;
}

// Repeated full scans deleting any vertex of degree < 3 within `alive`.
inline std::uint32_t core_of(const Graph& g, std::uint32_t alive) {
  const auto adj = masks(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      if (((alive >> v) & 1U) && std::popcount(adj[static_cast<std::size_t>(v)] & alive) < 3) {
        alive &= ~(1U << v);
        changed = true;
      }
    }
  }
  return alive;
}

inline std::uint32_t full(int n) { return n == 32 ? ~0U : ((1U << n) - 1U); }

inline std::vector<Vertex> core_vertices(const Graph& g) {
  const std::uint32_t c = core_of(g, full(g.order()));
  std::vector<Vertex> out;
  for (int v = 0; v < g.order(); ++v) {
    if ((c >> v) & 1U) out.push_back(v);
  }
  return out;
}

// Peeling in a random order: keep deleting a random vertex of degree < 3.
template <typename Rng>
std::vector<Vertex> random_order_core(const Graph& g, Rng& rng) {
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  while (true) {
    std::vector<Vertex> low;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += alive[static_cast<std::size_t>(w)];
      if (d < 3) low.push_back(v);
    }
    if (low.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, low.size() - 1);
    alive[static_cast<std::size_t>(low[pick(rng)])] = 0;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (alive[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

// Literal definition: 2n - 2 edges, core(G) = G, core(G - v) empty for all v.
inline bool degree3_critical(const Graph& g) {
  const int n = g.order();
  if (n == 0 || static_cast<int>(g.edge_count()) != 2 * n - 2) return false;
  if (core_of(g, full(n)) != full(n)) return false;
  for (int v = 0; v < n; ++v) {
    if (core_of(g, full(n) & ~(1U << v)) != 0) return false;
  }
  return true;
}

// Every proper vertex subset, then every single-edge deletion.
inline bool proper_subgraph_min_degree3(const Graph& g) {
  const int n = g.order();
  const auto adj = masks(g);
  for (std::uint32_t s = 1; s < full(n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if ((s >> v) & 1U) ok = std::popcount(adj[static_cast<std::size_t>(v)] & s) >= 3;
    }
    if (ok) return true;
  }
  for (const Edge& e : g.edges()) {
    if (core_of(g.without_edge(e.u, e.v), full(n)) != 0) return true;
  }
  return false;
}

// Held-Karp style: paths from the lowest vertex of each mask.
inline LengthSet cycle_spectrum(const Graph& g) {
  const int n = g.order();
  const auto adj = masks(g);
  LengthSet out;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int s = 0; s < n; ++s) ends[std::size_t{1} << s] = 1U << s;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const std::uint32_t e = ends[mask];
    if (e == 0) continue;
    const int s = std::countr_zero(mask);
    const int size = std::popcount(mask);
    if (size >= 3 && (e & adj[static_cast<std::size_t>(s)]) != 0) out.insert(size);
    for (int v = 0; v < n; ++v) {
      if (!((e >> v) & 1U)) continue;
      std::uint32_t nxt = adj[static_cast<std::size_t>(v)] & ~mask & ~((1U << s) - 1U) & ~(1U << s);
      while (nxt != 0) {
        const int w = std::countr_zero(nxt);
        nxt &= nxt - 1;
        ends[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  return out;
}

// Vertex set of the unique tree path between a and b.
inline std::vector<char> tree_path(const Tree& t, Vertex a, Vertex b) {
  const Graph& g = t.graph();
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
  std::vector<Vertex> queue{a};
  parent[static_cast<std::size_t>(a)] = -1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (Vertex w : g.neighbors(queue[h])) {
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = queue[h];
        queue.push_back(w);
      }
    }
  }
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = b; v != -1; v = parent[static_cast<std::size_t>(v)]) on[static_cast<std::size_t>(v)] = 1;
  return on;
}

inline LengthSet leaf_leaf_lengths(const Tree& t) {
  LengthSet out;
  const auto& leaves = t.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i; j < leaves.size(); ++j) {
      const auto on = tree_path(t, leaves[i], leaves[j]);
      out.insert(static_cast<int>(std::count(on.begin(), on.end(), 1)) - 1);
    }
  }
  return out;
}

// All pairs of leaf pairs whose tree paths share no vertex.
inline LengthSet disjoint_pair_sums(const Tree& t) {
  struct P {
    std::vector<char> on;
    int len;
  };
  std::vector<P> paths;
  const auto& leaves = t.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i; j < leaves.size(); ++j) {
      auto on = tree_path(t, leaves[i], leaves[j]);
      const int len = static_cast<int>(std::count(on.begin(), on.end(), 1)) - 1;
      paths.push_back({std::move(on), len});
    }
  }
  LengthSet out;
  for (std::size_t a = 0; a < paths.size(); ++a) {
    for (std::size_t b = a + 1; b < paths.size(); ++b) {
      bool disjoint = true;
      for (std::size_t v = 0; v < paths[a].on.size() && disjoint; ++v) {
        disjoint = !(paths[a].on[v] && paths[b].on[v]);
      }
      if (disjoint) out.insert(paths[a].len + paths[b].len);
    }
  }
  return out;
}

template <typename Rng>
Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

template <typename Rng>
Graph random_graph_with_edges(int n, int m, Rng& rng) {
  auto all = deg3lab::complete_graph(n).edges();
  std::shuffle(all.begin(), all.end(), rng);
  Graph g(n);
  for (int t = 0; t < m; ++t) g.add_edge(all[static_cast<std::size_t>(t)].u, all[static_cast<std::size_t>(t)].v);
  return g;
}

// Random tree by attaching each new vertex to an earlier one.
template <typename Rng>
Tree random_tree(int n, Rng& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  return Tree(std::move(g));
}

}  // namespace oracle
