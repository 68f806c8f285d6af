#pragma once

// Trees, the spine construction T(x_1..x_n), and leaf-leaf path lengths.
//
// A leaf is a vertex of degree <= 1.  Length sets always contain 0 when the
// tree has a leaf: a single leaf counts as a leaf-leaf path of length 0.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deg3lab/errors.hpp"
#include "deg3lab/graph.hpp"

namespace deg3lab {

using LengthSet = std::set<int>;

class Tree {
 public:
  Tree() : Tree(Graph(1)) {}

  explicit Tree(Graph g, std::optional<Vertex> root = std::nullopt) : graph_(std::move(g)), root_(root) {
    detail::require(graph_.order() >= 1, "a tree needs at least one vertex");
    detail::require(graph_.edge_count() + 1 == static_cast<std::size_t>(graph_.order()) && is_connected(graph_),
                    "graph is not a tree");
    detail::require(!root_ || (*root_ >= 0 && *root_ < graph_.order()), "tree root out of range");
    for (Vertex v = 0; v < graph_.order(); ++v) {
      if (graph_.degree(v) <= 1) leaves_.push_back(v);
    }
  }

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  std::optional<Vertex> root() const { return root_; }
  const std::vector<Vertex>& leaves() const { return leaves_; }
  bool is_leaf(Vertex v) const { return graph_.degree(v) <= 1; }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Graph graph_;
  std::optional<Vertex> root_;
  std::vector<Vertex> leaves_;
};

inline constexpr int kMaxPerfectDepth = 20;

namespace detail {

// Appends a perfect binary tree of the given depth in level order starting at
// label `first`; children of local index i are 2i+1 and 2i+2.
inline void append_perfect_tree(std::vector<Edge>& edges, int first, int depth) {
  const int size = (1 << (depth + 1)) - 1;
  for (int i = 0; 2 * i + 2 < size; ++i) {
    edges.push_back({first + i, first + 2 * i + 1});
    edges.push_back({first + i, first + 2 * i + 2});
  }
}

}  // namespace detail

/// Perfect binary tree rooted at 0 in level order.
inline Tree perfect_binary_tree(int depth) {
  detail::require(depth >= 0 && depth <= kMaxPerfectDepth,
                  "perfect_binary_tree depth must be in [0, " + std::to_string(kMaxPerfectDepth) + "]");
  std::vector<Edge> edges;
  detail::append_perfect_tree(edges, 0, depth);
  return Tree(Graph((1 << (depth + 1)) - 1, edges), 0);
}

/// A root joined to the roots of three perfect binary trees of depth d.
inline Tree bollobas_brightwell_tree(int depth) {
  detail::require(depth >= 0 && depth < kMaxPerfectDepth, "bollobas_brightwell_tree depth out of range");
  const int size = (1 << (depth + 1)) - 1;
  std::vector<Edge> edges;
  for (int s = 0; s < 3; ++s) {
    const int first = 1 + s * size;
    edges.push_back({0, first});
    detail::append_perfect_tree(edges, first, depth);
  }
  return Tree(Graph(1 + 3 * size, edges), 0);
}

inline bool is_odd_even(std::span<const int> xs) {
  for (std::size_t t = 0; t < xs.size(); ++t) {
    if (xs[t] <= 0 || static_cast<std::size_t>(xs[t] % 2) != (t + 1) % 2) return false;
  }
  return true;
}

/// Number of vertices of T(x_1..x_n).
inline long long spine_tree_order(std::span<const int> xs) {
  long long total = static_cast<long long>(xs.size());
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const long long pendant = (1LL << xs[t]) - 1;
    total += (t == 0 || t + 1 == xs.size()) ? 2 * pendant : pendant;
  }
  return total;
}

/// T(x_1..x_n).  Spine v_1..v_n is 0..n-1; pendant perfect trees of depth
/// x_i - 1 follow in spine order (two each at v_1 and v_n), each in level
/// order.
inline Tree build_spine_tree(std::span<const int> xs) {
  detail::require(xs.size() >= 2, "build_spine_tree needs n >= 2");
  for (int x : xs) detail::require(x >= 1 && x <= kMaxPerfectDepth, "spine values must be in [1, 20]");
  const long long total = spine_tree_order(xs);
  detail::require(total <= 50'000'000, "spine tree too large");
  const int n = static_cast<int>(xs.size());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(total));
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  int next = n;
  for (int i = 0; i < n; ++i) {
    const int copies = (i == 0 || i == n - 1) ? 2 : 1;
    const int depth = xs[static_cast<std::size_t>(i)] - 1;
    for (int c = 0; c < copies; ++c) {
      edges.push_back({i, next});
      detail::append_perfect_tree(edges, next, depth);
      next += (1 << (depth + 1)) - 1;
    }
  }
  return Tree(Graph(next, edges));
}

inline Tree build_spine_tree(std::initializer_list<int> xs) {
  return build_spine_tree(std::span<const int>(xs.begin(), xs.size()));
}

inline bool is_13_tree(const Tree& t) {
  for (Vertex v = 0; v < t.order(); ++v) {
    const int d = t.graph().degree(v);
    if (d != 1 && d != 3) return false;
  }
  return true;
}

namespace detail {

inline std::vector<int> bfs_distances(const Graph& g, Vertex s) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue{s};
  dist[static_cast<std::size_t>(s)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace detail

/// All leaves in one class of the bipartition.
inline bool is_even_tree(const Tree& t) {
  const auto dist = detail::bfs_distances(t.graph(), 0);
  const auto& leaves = t.leaves();
  for (Vertex v : leaves) {
    if (dist[static_cast<std::size_t>(v)] % 2 != dist[static_cast<std::size_t>(leaves.front())] % 2) return false;
  }
  return true;
}

/// Leaf-leaf distances by BFS from every leaf, plus 0.
inline LengthSet leaf_leaf_lengths(const Tree& t) {
  LengthSet out;
  if (!t.leaves().empty()) out.insert(0);
  for (Vertex s : t.leaves()) {
    const auto dist = detail::bfs_distances(t.graph(), s);
    for (Vertex w : t.leaves()) {
      if (w > s) out.insert(dist[static_cast<std::size_t>(w)]);
    }
  }
  return out;
}

/// Closed form for the leaf-leaf lengths of T(x_1..x_n), odd-even x:
/// every 2m below 2 max x_i, the two end values 2x_1 and 2x_n, and
/// x_i + x_j + |i - j| for i != j.
inline LengthSet predicted_lengths(std::span<const int> xs) {
  detail::require(xs.size() >= 2, "predicted_lengths needs n >= 2");
  detail::require(is_odd_even(xs), "predicted_lengths needs an odd-even sequence");
  const int top = *std::max_element(xs.begin(), xs.end());
  LengthSet out;
  for (int m = 0; m < top; ++m) out.insert(2 * m);
  out.insert(2 * xs.front());
  out.insert(2 * xs.back());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      out.insert(xs[i] + xs[j] + static_cast<int>(j - i));
    }
  }
  return out;
}

inline LengthSet predicted_lengths(std::initializer_list<int> xs) {
  return predicted_lengths(std::span<const int>(xs.begin(), xs.size()));
}

/// Fixed-width bitset over small non-negative integers.
class LengthBits {
 public:
  explicit LengthBits(int bits = 0) : words_(static_cast<std::size_t>((bits + 63) / 64), 0) {}

  int capacity() const { return static_cast<int>(words_.size() * 64); }

  void set(int i) {
    if (i >= 0 && i < capacity()) words_[static_cast<std::size_t>(i / 64)] |= 1ULL << (i % 64);
  }
  bool test(int i) const {
    return i >= 0 && i < capacity() && ((words_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1ULL);
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  LengthBits& operator|=(const LengthBits& o) {
    for (std::size_t t = 0; t < words_.size() && t < o.words_.size(); ++t) words_[t] |= o.words_[t];
    return *this;
  }

  /// this |= (o << s)
  void or_shifted(const LengthBits& o, int s) {
    const std::size_t ws = static_cast<std::size_t>(s / 64);
    const int bs = s % 64;
    for (std::size_t t = 0; t + ws < words_.size() && t < o.words_.size(); ++t) {
      words_[t + ws] |= o.words_[t] << bs;
      if (bs != 0 && t + ws + 1 < words_.size()) words_[t + ws + 1] |= o.words_[t] >> (64 - bs);
    }
  }

  /// this |= {a + b : a in x, b in y}
  void or_sumset(const LengthBits& x, const LengthBits& y) {
    for (std::size_t t = 0; t < x.words_.size(); ++t) {
      std::uint64_t w = x.words_[t];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        or_shifted(y, static_cast<int>(t * 64) + bit);
        w &= w - 1;
      }
    }
  }

  LengthSet to_set() const {
    LengthSet out;
    for (int i = 0; i < capacity(); ++i) {
      if (test(i)) out.insert(i);
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Leaf-leaf lengths and sums over vertex-disjoint leaf-leaf path pairs.
struct TreePathProfile {
  LengthSet leaf_leaf;
  LengthSet pair_sums;
};

/// Dynamic programme over the tree rooted at vertex 0.
///
/// Two vertex-disjoint paths are separated by some edge (c, parent(c)), so
/// pair sums are the union over c of in[c] + out[c], where in[c] is the set of
/// leaf-leaf lengths inside the subtree of c and out[c] the set outside it.
/// Paths through a vertex are combined from two distinct arms, or from one
/// arm when the vertex is itself a leaf.
inline TreePathProfile tree_path_profile(const Tree& t) {
  const Graph& g = t.graph();
  const int n = g.order();
  const auto nn = static_cast<std::size_t>(n);

  const auto d0 = detail::bfs_distances(g, 0);
  const Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  const auto d1 = detail::bfs_distances(g, far);
  const int diameter = *std::max_element(d1.begin(), d1.end());
  const int width = 2 * diameter + 2;

  std::vector<Vertex> parent(nn, -1);
  std::vector<Vertex> order{0};
  order.reserve(nn);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (Vertex w : g.neighbors(v)) {
      if (w != parent[static_cast<std::size_t>(v)]) {
        parent[static_cast<std::size_t>(w)] = v;
        order.push_back(w);
      }
    }
  }
  auto children = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v)) {
      if (w != parent[static_cast<std::size_t>(v)]) out.push_back(w);
    }
    return out;
  };

  const LengthBits empty(width);
  LengthBits zero(width);
  zero.set(0);

  // Pairwise sums and unions over prefixes and suffixes of an arm list, so
  // that each arm can be excluded in turn.
  struct Sweep {
    std::vector<LengthBits> uni;
    std::vector<LengthBits> pairs;
  };
  auto sweep = [&](const std::vector<const LengthBits*>& arms, bool reverse) {
    const std::size_t r = arms.size();
    Sweep s{std::vector<LengthBits>(r + 1, empty), std::vector<LengthBits>(r + 1, empty)};
    for (std::size_t k = 0; k < r; ++k) {
      const LengthBits& a = *arms[reverse ? r - 1 - k : k];
      s.pairs[k + 1] = s.pairs[k];
      s.pairs[k + 1].or_sumset(s.uni[k], a);
      s.uni[k + 1] = s.uni[k];
      s.uni[k + 1] |= a;
    }
    return s;
  };

  std::vector<LengthBits> down(nn, empty);   // distances to leaves below, from v
  std::vector<LengthBits> arm(nn, empty);    // down shifted by one, seen from the parent
  std::vector<LengthBits> inside(nn, empty);
  LengthBits all_lengths(width);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const auto vi = static_cast<std::size_t>(v);
    const auto kids = children(v);
    std::vector<const LengthBits*> arms;
    if (t.is_leaf(v)) {
      down[vi].set(0);
      arms.push_back(&zero);
      inside[vi].set(0);
    }
    for (Vertex c : kids) {
      const auto ci = static_cast<std::size_t>(c);
      down[vi] |= arm[ci];
      inside[vi] |= inside[ci];
      arms.push_back(&arm[ci]);
    }
    const Sweep s = sweep(arms, false);
    inside[vi] |= s.pairs.back();
    arm[vi].or_shifted(down[vi], 1);
  }
  all_lengths = inside[0];

  std::vector<LengthBits> up(nn, empty);       // distances from v to leaves outside its subtree
  std::vector<LengthBits> outside(nn, empty);
  LengthBits pair_sums(width);
  for (const Vertex v : order) {
    const auto vi = static_cast<std::size_t>(v);
    const auto kids = children(v);
    if (kids.empty()) continue;
    // Arm list: children first, then the upward arm and the zero arm.
    std::vector<const LengthBits*> arms;
    for (Vertex c : kids) arms.push_back(&arm[static_cast<std::size_t>(c)]);
    LengthBits extra_uni = up[vi];
    if (t.is_leaf(v)) extra_uni.set(0);
    LengthBits extra_pairs(width);
    extra_pairs.or_sumset(up[vi], t.is_leaf(v) ? zero : empty);
    if (t.is_leaf(v)) extra_pairs.set(0);

    const Sweep pre = sweep(arms, false);
    const Sweep suf = sweep(arms, true);
    std::vector<const LengthBits*> ins;
    for (Vertex c : kids) ins.push_back(&inside[static_cast<std::size_t>(c)]);
    const Sweep ipre = sweep(ins, false);
    const Sweep isuf = sweep(ins, true);

    const std::size_t r = kids.size();
    for (std::size_t k = 0; k < r; ++k) {
      const auto ci = static_cast<std::size_t>(kids[k]);
      LengthBits uni = pre.uni[k];
      uni |= suf.uni[r - 1 - k];
      LengthBits through = pre.pairs[k];
      through |= suf.pairs[r - 1 - k];
      through.or_sumset(pre.uni[k], suf.uni[r - 1 - k]);
      through.or_sumset(uni, extra_uni);
      through |= extra_pairs;

      LengthBits reach = uni;
      reach |= extra_uni;
      up[ci].or_shifted(reach, 1);

      outside[ci] = outside[vi];
      outside[ci] |= ipre.uni[k];
      outside[ci] |= isuf.uni[r - 1 - k];
      outside[ci] |= through;
      pair_sums.or_sumset(inside[ci], outside[ci]);
    }
  }
  return TreePathProfile{all_lengths.to_set(), pair_sums.to_set()};
}

/// Sums e(P1) + e(P2) over vertex-disjoint leaf-leaf paths P1, P2.
inline LengthSet disjoint_pair_sums(const Tree& t) { return tree_path_profile(t).pair_sums; }

}  // namespace deg3lab
