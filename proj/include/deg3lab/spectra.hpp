#pragma once

// Cycle spectra: exhaustive search, the G(T) construction, and the spectrum
// of G(T) read off from path lengths in T.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deg3lab/errors.hpp"
#include "deg3lab/graph.hpp"
#include "deg3lab/sequences.hpp"
#include "deg3lab/trees.hpp"

namespace deg3lab {

inline constexpr std::uint64_t kDefaultCycleBudget = 100'000'000ULL;

/// G(T): vertices x = |T| and y = |T| + 1, the edge xy, and both x and y
/// joined to every leaf of T.
inline Graph g_of_t(const Tree& t) {
  detail::require(!t.leaves().empty(), "g_of_t needs a tree with a leaf");
  const int n = t.order();
  Graph g(n + 2);
  for (const Edge& e : t.graph().edges()) g.add_edge(e.u, e.v);
  g.add_edge(n, n + 1);
  for (Vertex leaf : t.leaves()) {
    g.add_edge(leaf, n);
    g.add_edge(leaf, n + 1);
  }
  return g;
}

/// A graph recognised as G(T), with the tree and where its vertices went.
struct GOfTDecomposition {
  Tree tree;
  Vertex x = -1;
  Vertex y = -1;
  std::vector<Vertex> tree_to_graph;
};

/// Recognises G(T): an edge xy with N(x) - y = N(y) - x equal to the leaf
/// set of the tree G - x - y.  Tries the two largest labels first.
inline std::optional<GOfTDecomposition> recognize_g_of_t(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  auto attempt = [&](Vertex x, Vertex y) -> std::optional<GOfTDecomposition> {
    if (!g.has_edge(x, y)) return std::nullopt;
    std::vector<Vertex> nx;
    std::vector<Vertex> ny;
    for (Vertex w : g.neighbors(x)) {
      if (w != y) nx.push_back(w);
    }
    for (Vertex w : g.neighbors(y)) {
      if (w != x) ny.push_back(w);
    }
    if (nx != ny || nx.empty()) return std::nullopt;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
      if (v != x && v != y) keep.push_back(v);
    }
    Graph rest = g.induced(keep);
    if (rest.edge_count() + 1 != static_cast<std::size_t>(rest.order()) || !is_connected(rest)) return std::nullopt;
    Tree t(std::move(rest));
    std::vector<Vertex> leaves;
    for (Vertex l : t.leaves()) leaves.push_back(keep[static_cast<std::size_t>(l)]);
    if (leaves != nx) return std::nullopt;
    return GOfTDecomposition{std::move(t), x, y, std::move(keep)};
  };
  if (auto d = attempt(n - 2, n - 1)) return d;
  for (const Edge& e : g.edges()) {
    if (e.u == n - 2 && e.v == n - 1) continue;
    if (g.degree(e.u) != g.degree(e.v)) continue;
    if (auto d = attempt(e.u, e.v)) return d;
  }
  return std::nullopt;
}

enum class CycleStatus { Found, NotFound, Inconclusive };

inline const char* to_string(CycleStatus s) {
  switch (s) {
    case CycleStatus::Found: return "found";
    case CycleStatus::NotFound: return "not-found";
    case CycleStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct CycleSearchResult {
  CycleStatus status = CycleStatus::NotFound;
  std::vector<Vertex> witness;
  std::uint64_t expansions = 0;
};

namespace detail {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int length, std::uint64_t budget)
      : g_(g), length_(length), budget_(budget),
        on_path_(static_cast<std::size_t>(g.order()), 0),
        dist_(static_cast<std::size_t>(g.order()), -1) {}

  CycleSearchResult run() {
    CycleSearchResult res;
    const int n = g_.order();
    for (Vertex a = 0; a + length_ <= n; ++a) {
      anchor_ = a;
      distances_from_anchor();
      path_.assign(1, a);
      on_path_[static_cast<std::size_t>(a)] = 1;
      const int r = extend(a);
      on_path_[static_cast<std::size_t>(a)] = 0;
      if (r == 1) {
        res.status = CycleStatus::Found;
        res.witness = path_;
        break;
      }
      if (r < 0) {
        res.status = CycleStatus::Inconclusive;
        break;
      }
    }
    res.expansions = expansions_;
    return res;
  }

 private:
  // BFS from the anchor inside vertices with larger labels.
  void distances_from_anchor() {
    std::fill(dist_.begin(), dist_.end(), -1);
    std::vector<Vertex> queue{anchor_};
    dist_[static_cast<std::size_t>(anchor_)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g_.neighbors(v)) {
        if (w > anchor_ && dist_[static_cast<std::size_t>(w)] < 0) {
          dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  // 1 found, 0 exhausted, -1 budget hit.
  int extend(Vertex u) {
    const int have = static_cast<int>(path_.size());
    if (have == length_) return g_.has_edge(u, anchor_) && (length_ > 2) ? 1 : 0;
    for (Vertex w : g_.neighbors(u)) {
      const auto wi = static_cast<std::size_t>(w);
      if (w <= anchor_ || on_path_[wi] || dist_[wi] < 0) continue;
      // After w the path has have + 1 vertices and needs length - have more edges home.
      if (dist_[wi] > length_ - have) continue;
      if (++expansions_ > budget_) return -1;
      path_.push_back(w);
      on_path_[wi] = 1;
      const int r = extend(w);
      if (r == 1) return 1;
      on_path_[wi] = 0;
      path_.pop_back();
      if (r < 0) return -1;
    }
    return 0;
  }

  const Graph& g_;
  int length_;
  std::uint64_t budget_;
  Vertex anchor_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  std::vector<int> dist_;
  std::uint64_t expansions_ = 0;
};

}  // namespace detail

/// Backtracking search for a simple cycle on exactly `length` vertices, anchored
/// at its smallest label and pruned by BFS distance back to the anchor.
inline CycleSearchResult find_cycle_of_length(const Graph& g, int length,
                                              std::uint64_t budget = kDefaultCycleBudget) {
  detail::require(length >= 3 && length <= g.order(), "cycle length must be in [3, n]");
  return detail::CycleSearch(g, length, budget).run();
}

/// Found / NotFound, or Inconclusive when the expansion budget runs out.
inline CycleStatus contains_cycle_of_length(const Graph& g, int length,
                                            std::uint64_t budget = kDefaultCycleBudget) {
  return find_cycle_of_length(g, length, budget).status;
}

/// Whether `cycle` lists a simple cycle of g in order.
inline bool is_cycle_in(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const Vertex v = cycle[t];
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (!g.has_edge(v, cycle[(t + 1) % cycle.size()])) return false;
  }
  return true;
}

struct CycleSpectrum {
  int n = 0;
  LengthSet lengths;
  std::map<int, std::vector<Vertex>> witnesses;
  std::vector<int> inconclusive;
  std::uint64_t expansions = 0;

  bool complete() const { return inconclusive.empty(); }
  bool contains(int length) const { return lengths.count(length) != 0; }
};

/// Runs the cycle search for every length 3..n.  Lengths whose search ran
/// out of budget are listed in `inconclusive`, not in `lengths`.
inline CycleSpectrum cycle_spectrum_exhaustive(const Graph& g, std::uint64_t budget = kDefaultCycleBudget) {
  CycleSpectrum s;
  s.n = g.order();
  for (int length = 3; length <= g.order(); ++length) {
    auto r = find_cycle_of_length(g, length, budget);
    s.expansions += r.expansions;
    if (r.status == CycleStatus::Found) {
      s.lengths.insert(length);
      s.witnesses.emplace(length, std::move(r.witness));
    } else if (r.status == CycleStatus::Inconclusive) {
      s.inconclusive.push_back(length);
    }
  }
  return s;
}

/// Throws BudgetExceeded unless the spectrum is complete.
inline const CycleSpectrum& require_complete(const CycleSpectrum& s) {
  if (!s.complete()) {
    throw BudgetExceeded("cycle search inconclusive for length " + std::to_string(s.inconclusive.front()));
  }
  return s;
}

/// Spectrum of G(T) for an even 1-3 tree T:
/// odd lengths l + 3 for leaf-leaf lengths l; even lengths l + 2 for l >= 2,
/// and s + 4 for sums s over vertex-disjoint leaf-leaf path pairs.
inline CycleSpectrum cycle_spectrum_via_tree(const Tree& t) {
  detail::require(is_13_tree(t), "cycle_spectrum_via_tree needs a 1-3 tree");
  detail::require(is_even_tree(t), "cycle_spectrum_via_tree needs an even tree");
  const auto profile = tree_path_profile(t);
  CycleSpectrum s;
  s.n = t.order() + 2;
  for (int l : profile.leaf_leaf) {
    s.lengths.insert(l + 3);
    if (l >= 2) s.lengths.insert(l + 2);
  }
  for (int p : profile.pair_sums) s.lengths.insert(p + 4);
  return s;
}

inline bool is_pancyclic(const Graph& g, std::uint64_t budget = kDefaultCycleBudget) {
  detail::require(g.order() >= 3, "is_pancyclic needs n >= 3");
  for (int length = 3; length <= g.order(); ++length) {
    const auto st = contains_cycle_of_length(g, length, budget);
    if (st == CycleStatus::Inconclusive) {
      throw BudgetExceeded("cycle search inconclusive for length " + std::to_string(length));
    }
    if (st == CycleStatus::NotFound) return false;
  }
  return true;
}

/// Largest cycle length, 0 for a forest.
inline int longest_cycle_length(const Graph& g, std::uint64_t budget = kDefaultCycleBudget) {
  for (int length = g.order(); length >= 3; --length) {
    const auto st = contains_cycle_of_length(g, length, budget);
    if (st == CycleStatus::Inconclusive) {
      throw BudgetExceeded("cycle search inconclusive for length " + std::to_string(length));
    }
    if (st == CycleStatus::Found) return length;
  }
  return 0;
}

inline constexpr int kMaxCounterexampleTerms = 1000;

/// T(a_1..a_n) for the first n terms of the period-24 20-avoiding sequence.
inline Tree counterexample_tree(int n) {
  detail::require(n >= 2 && n <= kMaxCounterexampleTerms, "counterexample size must be in [2, 1000]");
  std::vector<int> xs(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) xs[static_cast<std::size_t>(i - 1)] = twenty_avoiding_term(i);
  return build_spine_tree(xs);
}

/// Degree 3-critical graph G(T_n) with no cycle of length 23.
inline Graph counterexample_graph(int n) { return g_of_t(counterexample_tree(n)); }

}  // namespace deg3lab
