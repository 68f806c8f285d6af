#pragma once

// The family of graphs with 2n - 2 edges and no proper (not necessarily
// induced) subgraph of minimum degree 3: wheels, and pairs H_i, H_j glued at
// their connectors.
//
// Labeling conventions:
//   wheel(n):      centre 0, rim 1..n-1 in cyclic order.
//   h_graph(n):    x = 0, y = 1, internal path v_i = i + 1.
//   glue_h(i,j,s): H_i labeled as h_graph(i); the internal vertices of H_j
//                  follow from label i.  s = false identifies x' = 0 and
//                  y' = 1, s = true identifies x' = 1 and y' = 0.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "deg3lab/core.hpp"
#include "deg3lab/errors.hpp"
#include "deg3lab/graph.hpp"
#include "deg3lab/isomorphism.hpp"

namespace deg3lab {

inline Graph wheel(int n) {
  detail::require(n >= 4, "wheel needs n >= 4");
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n - 1 ? 1 : i + 1);
  }
  return g;
}

inline Graph h_graph(int n) {
  detail::require(n >= 4, "h_graph needs n >= 4");
  Graph g(n);
  for (int v = 2; v < n; ++v) {
    g.add_edge(0, v);
    if (v + 1 < n) g.add_edge(v, v + 1);
  }
  g.add_edge(1, 2);
  g.add_edge(1, n - 1);
  return g;
}

inline Graph glue_h(int i, int j, bool swap) {
  detail::require(i >= 4 && j >= 4, "glue_h needs i, j >= 4");
  Graph g = h_graph(i);
  Graph out(i + j - 2);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  const Vertex xp = swap ? 1 : 0;
  const Vertex yp = swap ? 0 : 1;
  const int first = i;
  const int last = i + j - 3;
  for (int v = first; v <= last; ++v) {
    out.add_edge(xp, v);
    if (v < last) out.add_edge(v, v + 1);
  }
  out.add_edge(yp, first);
  out.add_edge(yp, last);
  return out;
}

/// An induced H_m: internal path in path order, connectors x (adjacent to
/// the whole path) and y (adjacent to its ends).
struct InducedH {
  std::vector<Vertex> internal;
  Vertex x = -1;
  Vertex y = -1;
  int m() const { return static_cast<int>(internal.size()) + 2; }
};

namespace detail {

inline std::string edge_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Orders `set` along the path G[set], starting from the end with the smaller
// label; throws when G[set] is not an induced path.
inline std::vector<Vertex> path_order(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : set) in[static_cast<std::size_t>(v)] = 1;
  auto inner_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += in[static_cast<std::size_t>(w)];
    return d;
  };
  if (set.size() == 1) return set;
  std::optional<Vertex> start;
  std::size_t inner_edges = 0;
  for (Vertex v : set) {
    const int d = inner_degree(v);
    inner_edges += static_cast<std::size_t>(d);
    require(d >= 1 && d <= 2, "internal vertex " + std::to_string(v) + " breaks the internal path");
    if (d == 1 && (!start || v < *start)) start = v;
  }
  require(start.has_value() && inner_edges / 2 + 1 == set.size(), "internal vertices do not induce a path");
  std::vector<Vertex> out{*start};
  Vertex prev = -1;
  Vertex cur = *start;
  while (out.size() < set.size()) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (in[static_cast<std::size_t>(w)] && w != prev) {
        next = w;
        break;
      }
    }
    require(next >= 0, "internal vertices do not induce a connected path");
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

}  // namespace detail

/// Checks that internal ∪ {x, y} induces H_m with connectors x, y and that no
/// internal vertex has a neighbour outside it.  Returns the internal path in
/// path order; throws PreconditionError naming the offending vertex or edge.
inline InducedH validate_induced_h(const Graph& g, const std::vector<Vertex>& internal, Vertex x, Vertex y) {
  const int n = g.order();
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };
  detail::require(in_range(x) && in_range(y) && x != y, "connectors must be distinct vertices of the graph");
  detail::require(internal.size() >= 2, "H_m needs at least two internal vertices");
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  for (Vertex v : internal) {
    detail::require(in_range(v), "internal vertex " + std::to_string(v) + " out of range");
    detail::require(v != x && v != y, "connector " + std::to_string(v) + " listed as internal");
    detail::require(!mark[static_cast<std::size_t>(v)], "internal vertex " + std::to_string(v) + " repeated");
    mark[static_cast<std::size_t>(v)] = 1;
  }
  detail::require(!g.has_edge(x, y), "connectors joined by edge " + detail::edge_name(x, y));
  for (Vertex v : internal) {
    for (Vertex w : g.neighbors(v)) {
      detail::require(mark[static_cast<std::size_t>(w)] || w == x || w == y,
                      "internal vertex " + std::to_string(v) + " has outside neighbour " + std::to_string(w));
    }
    detail::require(g.has_edge(v, x), "missing edge " + detail::edge_name(x, v));
  }
  InducedH h{detail::path_order(g, internal), x, y};
  for (std::size_t t = 0; t < h.internal.size(); ++t) {
    const bool end = t == 0 || t + 1 == h.internal.size();
    const Vertex v = h.internal[t];
    if (end) {
      detail::require(g.has_edge(y, v), "missing edge " + detail::edge_name(y, v));
    } else {
      detail::require(!g.has_edge(y, v), "extra edge " + detail::edge_name(y, v));
    }
  }
  return h;
}

/// G / H_m with the surviving vertices relabeled in increasing order;
/// kept[t] is the original label of new vertex t.
struct Contraction {
  Graph graph;
  std::vector<Vertex> kept;
};

inline Contraction contract_h_mapped(const Graph& g, const std::vector<Vertex>& internal, Vertex x, Vertex y) {
  validate_induced_h(g, internal, x, y);
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : internal) drop[static_cast<std::size_t>(v)] = 1;
  Contraction c;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[static_cast<std::size_t>(v)]) c.kept.push_back(v);
  }
  c.graph = g.induced(c.kept);
  const auto pos = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(c.kept.begin(), c.kept.end(), v) - c.kept.begin());
  };
  c.graph.add_edge(pos(x), pos(y));
  return c;
}

inline Graph contract_h(const Graph& g, const std::vector<Vertex>& internal, Vertex x, Vertex y) {
  return contract_h_mapped(g, internal, x, y).graph;
}

/// A wheel's centre and its rim in cyclic order.
struct WheelShape {
  Vertex centre = -1;
  std::vector<Vertex> rim;
};

/// Recognises W_n: a vertex of degree n - 1 whose removal leaves a cycle.
inline std::optional<WheelShape> detect_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 4 || static_cast<long long>(g.edge_count()) != 2LL * n - 2) return std::nullopt;
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) ok = v == c || g.degree(v) == 3;
    if (!ok) continue;
    const Vertex start = c == 0 ? 1 : 0;
    std::vector<Vertex> rim{start};
    Vertex prev = -1;
    Vertex cur = start;
    while (true) {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (w != c && w != prev) {
          next = w;
          break;
        }
      }
      if (next == start || next < 0) break;
      prev = cur;
      cur = next;
      rim.push_back(cur);
    }
    if (static_cast<int>(rim.size()) == n - 1) return WheelShape{c, std::move(rim)};
  }
  return std::nullopt;
}

inline bool is_family_g_member(const Graph& g) {
  const long long n = g.order();
  return n >= 2 && static_cast<long long>(g.edge_count()) == 2 * n - 2 && !has_proper_subgraph_min_degree3(g);
}

/// Outcome of the H_m search on a member with at least 7 vertices.
struct HmSearch {
  bool wheel = false;
  Vertex centre = -1;
  std::optional<InducedH> h;
};

/// Takes the critical ordering x_1..x_n and the smallest k with x_n adjacent
/// to all of x_{k+1}..x_{n-1}.  k = 0 means a wheel centred at x_n; otherwise
/// {x_k..x_n} induces H_{n-k+1} with x = x_n, y = x_k and sealed internal
/// vertices.
inline HmSearch find_induced_hm(const Graph& g) {
  detail::require(g.order() >= 7, "find_induced_hm needs n >= 7");
  detail::require(is_family_g_member(g), "find_induced_hm needs a member of the family");
  const auto ord = critical_ordering(g).order;
  const int n = g.order();
  const Vertex last = ord[static_cast<std::size_t>(n - 1)];
  // ord is 0-based: x_i = ord[i - 1].
  int k = n - 2;
  while (k >= 1 && g.has_edge(last, ord[static_cast<std::size_t>(k - 1)])) --k;
  HmSearch out;
  if (k == 0) {
    out.wheel = true;
    out.centre = last;
    return out;
  }
  std::vector<Vertex> internal(ord.begin() + k, ord.end() - 1);
  try {
    out.h = validate_induced_h(g, internal, last, ord[static_cast<std::size_t>(k - 1)]);
  } catch (const PreconditionError& e) {
    throw std::logic_error(std::string("find_induced_hm: ordering did not yield H_m: ") + e.what());
  }
  return out;
}

enum class FamilyVerdict { Wheel, Glued, NotMember };

inline const char* to_string(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::Wheel: return "wheel";
    case FamilyVerdict::Glued: return "glued";
    case FamilyVerdict::NotMember: return "not-member";
  }
  return "?";
}

struct Classification {
  FamilyVerdict verdict = FamilyVerdict::NotMember;
  int n = 0;
  int i = 0;
  int j = 0;
  bool swap = false;
  /// Isomorphism onto the template (wheel(n) or glue_h(i, j, swap)).
  std::vector<Vertex> mapping;
  /// NotMember: "degenerate-order", "edge-count" or "proper-subgraph".
  std::string reason;
  std::optional<ProperSubgraphWitness> witness;
};

inline Graph classification_template(const Classification& c) {
  switch (c.verdict) {
    case FamilyVerdict::Wheel: return wheel(c.n);
    case FamilyVerdict::Glued: return glue_h(c.i, c.j, c.swap);
    case FamilyVerdict::NotMember: break;
  }
  throw PreconditionError("no template for a non-member");
}

namespace detail {

inline Classification wheel_classification(const Graph& g, const WheelShape& w) {
  Classification c;
  c.verdict = FamilyVerdict::Wheel;
  c.n = g.order();
  c.mapping.assign(static_cast<std::size_t>(c.n), -1);
  c.mapping[static_cast<std::size_t>(w.centre)] = 0;
  for (std::size_t t = 0; t < w.rim.size(); ++t) c.mapping[static_cast<std::size_t>(w.rim[t])] = static_cast<Vertex>(t + 1);
  return c;
}

// Canonical (i, j, swap): i <= j, and swap = false whenever a side is H_4,
// whose connectors are interchangeable.
inline Classification glued_classification(const Graph& g, InducedH a, InducedH b) {
  if (a.m() > b.m()) std::swap(a, b);
  bool swap = a.x != b.x;
  if (swap && a.m() == 4) {
    std::swap(a.x, a.y);
    swap = false;
  } else if (swap && b.m() == 4) {
    std::swap(b.x, b.y);
    swap = false;
  }
  Classification c;
  c.verdict = FamilyVerdict::Glued;
  c.n = g.order();
  c.i = a.m();
  c.j = b.m();
  c.swap = swap;
  c.mapping.assign(static_cast<std::size_t>(c.n), -1);
  c.mapping[static_cast<std::size_t>(a.x)] = 0;
  c.mapping[static_cast<std::size_t>(a.y)] = 1;
  for (std::size_t t = 0; t < a.internal.size(); ++t) c.mapping[static_cast<std::size_t>(a.internal[t])] = static_cast<Vertex>(2 + t);
  for (std::size_t t = 0; t < b.internal.size(); ++t) c.mapping[static_cast<std::size_t>(b.internal[t])] = static_cast<Vertex>(c.i + static_cast<int>(t));
  return c;
}

}  // namespace detail

/// Membership test with a decomposition.  Members are matched against
/// wheel(n) or glue_h(i, j, swap) and the returned mapping is checked to be
/// an isomorphism onto that template.
inline Classification classify_family_g(const Graph& g) {
  Classification out;
  const long long n = g.order();
  out.n = g.order();
  if (n <= 1) {
    out.reason = "degenerate-order";
    return out;
  }
  if (static_cast<long long>(g.edge_count()) != 2 * n - 2) {
    out.reason = "edge-count";
    return out;
  }
  if (auto w = find_proper_subgraph_min_degree3(g)) {
    out.reason = "proper-subgraph";
    out.witness = std::move(w);
    return out;
  }

  Classification c;
  if (auto w = detect_wheel(g)) {
    c = detail::wheel_classification(g, *w);
  } else if (n <= 6) {
    auto iso = find_isomorphism(g, glue_h(4, 4, false));
    if (!iso) throw std::logic_error("classify_family_g: small member matches no template");
    c.verdict = FamilyVerdict::Glued;
    c.n = g.order();
    c.i = 4;
    c.j = 4;
    c.mapping = *iso;
  } else {
    const HmSearch found = find_induced_hm(g);
    if (found.wheel || !found.h) throw std::logic_error("classify_family_g: wheel reported but not recognised");
    const InducedH& a = *found.h;
    const Contraction con = contract_h_mapped(g, a.internal, a.x, a.y);
#ifndef NDEBUG
    if (!is_family_g_member(con.graph)) throw std::logic_error("classify_family_g: contraction left the family");
#endif
    const auto shape = detect_wheel(con.graph);
    if (!shape) throw std::logic_error("classify_family_g: contraction is not a wheel");
    // The contracted edge a.x a.y joins the centre to a rim vertex; K_4 has
    // every vertex as a centre, so take a.x there.
    Vertex centre = con.kept[static_cast<std::size_t>(shape->centre)];
    std::vector<Vertex> rim;
    for (Vertex r : shape->rim) rim.push_back(con.kept[static_cast<std::size_t>(r)]);
    if (con.graph.order() == 4 && centre != a.x) {
      rim.clear();
      for (Vertex v = 0; v < 4; ++v) {
        if (con.kept[static_cast<std::size_t>(v)] != a.x) rim.push_back(con.kept[static_cast<std::size_t>(v)]);
      }
      centre = a.x;
    }
    if (centre != a.x && centre != a.y) throw std::logic_error("classify_family_g: contracted edge misses the centre");
    const Vertex w = centre == a.x ? a.y : a.x;
    // Rim minus w, read along the cycle starting after w.
    const auto at = std::find(rim.begin(), rim.end(), w);
    if (at == rim.end()) throw std::logic_error("classify_family_g: connector not on the rim");
    std::vector<Vertex> path;
    for (auto it = at + 1; it != rim.end(); ++it) path.push_back(*it);
    for (auto it = rim.begin(); it != at; ++it) path.push_back(*it);
    InducedH b{std::move(path), centre, w};
    c = detail::glued_classification(g, a, b);
  }
  if (!is_isomorphism(g, classification_template(c), c.mapping)) {
    throw std::logic_error("classify_family_g: decomposition does not match its template");
  }
  return c;
}

}  // namespace deg3lab
