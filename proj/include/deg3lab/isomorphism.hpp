#pragma once

// Exact isomorphism for small graphs by backtracking over label bijections.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deg3lab/errors.hpp"
#include "deg3lab/graph.hpp"

namespace deg3lab {

inline constexpr int kDefaultIsomorphismLimit = 12;

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {
    const int n = a.order();
    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    order_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order_[static_cast<std::size_t>(v)] = v;
    // Highest degree first, so constraints bite early.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex u, Vertex v) { return a.degree(u) > a.degree(v); });
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    for (Vertex c = 0; c < b_.order(); ++c) {
      if (used_[static_cast<std::size_t>(c)] || b_.degree(c) != a_.degree(u)) continue;
      bool ok = true;
      for (std::size_t t = 0; t < depth && ok; ++t) {
        const Vertex w = order_[t];
        ok = a_.has_edge(u, w) == b_.has_edge(c, map_[static_cast<std::size_t>(w)]);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(u)] = c;
      used_[static_cast<std::size_t>(c)] = 1;
      if (run(depth + 1)) return true;
      used_[static_cast<std::size_t>(c)] = 0;
      map_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  const std::vector<Vertex>& mapping() const { return map_; }

 private:
  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

}  // namespace detail

/// Whether v -> mapping[v] is an isomorphism from a onto b.
inline bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& mapping) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (mapping.size() != static_cast<std::size_t>(a.order())) return false;
  std::vector<char> hit(mapping.size(), 0);
  for (Vertex m : mapping) {
    if (m < 0 || m >= b.order() || hit[static_cast<std::size_t>(m)]) return false;
    hit[static_cast<std::size_t>(m)] = 1;
  }
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(mapping[static_cast<std::size_t>(e.u)], mapping[static_cast<std::size_t>(e.v)])) {
      return false;
    }
  }
  return true;
}

/// An isomorphism a -> b as a vertex map, or nullopt.  Throws
/// PreconditionError when either graph has more than `limit` vertices.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                           int limit = kDefaultIsomorphismLimit) {
  detail::require(a.order() <= limit && b.order() <= limit,
                  "isomorphism test limited to " + std::to_string(limit) + " vertices");
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  detail::IsoSearch search(a, b);
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

inline bool is_isomorphic(const Graph& a, const Graph& b, int limit = kDefaultIsomorphismLimit) {
  return find_isomorphism(a, b, limit).has_value();
}

}  // namespace deg3lab
