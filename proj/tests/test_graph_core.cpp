#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "deg3lab/core.hpp"
#include "deg3lab/family.hpp"
#include "deg3lab/isomorphism.hpp"
#include "deg3lab/spectra.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace deg3lab;

TEST(Graph, RejectsLoopsParallelEdgesAndRange) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), PreconditionError);
  EXPECT_THROW(g.add_edge(2, 2), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 3), PreconditionError);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, EdgeCountIsHalfDegreeSum) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(12, 0.4, rng);
    const auto d = g.degrees();
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), 0), 2 * static_cast<int>(g.edge_count()));
    for (const Edge& e : g.edges()) {
      EXPECT_LT(e.u, e.v);
      EXPECT_TRUE(g.has_edge(e.v, e.u));
    }
  }
}

TEST(Graph, InducedAndRelabeled) {
  const Graph w = wheel(6);
  const std::vector<Vertex> rim{1, 2, 3, 4, 5};
  EXPECT_EQ(w.induced(rim), cycle_graph(5));
  const std::vector<Vertex> perm{5, 4, 3, 2, 1, 0};
  const Graph r = w.relabeled(perm);
  EXPECT_EQ(r.degree(5), 5);
  EXPECT_EQ(r.edge_count(), 10u);
  EXPECT_EQ(w.without_vertex(0), cycle_graph(5));
  EXPECT_EQ(w.without_edge(0, 1).edge_count(), 9u);
}

TEST(Graph, ForEachGraphCountsSubsets) {
  int count = 0;
  for_each_graph(5, 3, [&](const Graph& g) {
    EXPECT_EQ(g.edge_count(), 3u);
    ++count;
  });
  EXPECT_EQ(count, 120);
}

TEST(ThreeCore, Examples) {
  EXPECT_TRUE(three_core_vertices(complete_graph(3)).empty());
  EXPECT_EQ(three_core(complete_graph(4)), complete_graph(4));
  EXPECT_EQ(three_core(wheel(6)), wheel(6));
  EXPECT_EQ(three_core(Graph(0)).order(), 0);
}

TEST(ThreeCore, Idempotent) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(14, 0.35, rng);
    const Graph c = three_core(g);
    EXPECT_EQ(three_core(c), c);
  }
}

TEST(ThreeCore, IndependentOfPeelingOrder) {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    const int n = 4 + t % 12;
    const Graph g = oracle::random_graph(n, 0.3 + 0.005 * t, rng);
    const auto expected = three_core_vertices(g);
    EXPECT_EQ(oracle::random_order_core(g, rng), expected);
    EXPECT_EQ(oracle::core_vertices(g), expected);
  }
}

TEST(ThreeCore, DenseGraphsHaveNonemptyCoreExhaustive) {
  for (int n = 2; n <= 6; ++n) {
    const int total = n * (n - 1) / 2;
    for (int m = 2 * n - 2; m <= total; ++m) {
      for_each_graph(n, m, [&](const Graph& g) { EXPECT_FALSE(three_core_vertices(g).empty()); });
    }
  }
}

TEST(ThreeCore, DenseGraphsHaveNonemptyCoreRandom) {
  std::mt19937 rng(17);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 14;
    const int total = n * (n - 1) / 2;
    const int lo = std::min(2 * n - 2, total);
    std::uniform_int_distribution<int> pick(lo, total);
    const Graph g = oracle::random_graph_with_edges(n, pick(rng), rng);
    if (static_cast<int>(g.edge_count()) >= 2 * n - 2) {
      EXPECT_FALSE(three_core_vertices(g).empty());
    }
  }
}

TEST(DegreeThreeCritical, Examples) {
  EXPECT_TRUE(is_degree3_critical(wheel(6)));
  // K4 = W4 has 6 = 2*4 - 2 edges and every K4 - v is a triangle.
  EXPECT_TRUE(is_degree3_critical(complete_graph(4)));
  EXPECT_FALSE(is_degree3_critical(complete_graph(5)));
  EXPECT_FALSE(is_degree3_critical(Graph(0)));
  EXPECT_FALSE(is_degree3_critical(Graph(1)));
  const Tree claw(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_TRUE(is_degree3_critical(g_of_t(claw)));
  EXPECT_TRUE(is_degree3_critical(g_of_t(build_spine_tree({2, 3, 2, 3, 2}))));
  EXPECT_TRUE(is_degree3_critical(fixture::adjacent_hubs()));
}

TEST(DegreeThreeCritical, MatchesDefinitionOnAllSevenVertexGraphs) {
  for (int n = 4; n <= 7; ++n) {
    long long critical = 0;
    for_each_graph(n, 2 * n - 2, [&](const Graph& g) {
      const bool expected = oracle::degree3_critical(g);
      ASSERT_EQ(is_degree3_critical(g), expected);
      critical += expected ? 1 : 0;
    });
    EXPECT_GT(critical, 0);
  }
}

TEST(DegreeThreeCritical, MatchesDefinitionOnRandomLargerGraphs) {
  std::mt19937 rng(19);
  int critical = 0;
  for (int t = 0; t < 3000; ++t) {
    const int n = 8 + t % 5;
    const Graph g = oracle::random_graph_with_edges(n, 2 * n - 2, rng);
    const bool expected = oracle::degree3_critical(g);
    ASSERT_EQ(is_degree3_critical(g), expected);
    critical += expected ? 1 : 0;
  }
  EXPECT_GT(critical, 0);
}

TEST(ProperSubgraph, Examples) {
  EXPECT_FALSE(has_proper_subgraph_min_degree3(wheel(6)));
  EXPECT_TRUE(has_proper_subgraph_min_degree3(fixture::adjacent_hubs()));
  EXPECT_FALSE(has_proper_subgraph_min_degree3(Graph(5)));
  const auto w = find_proper_subgraph_min_degree3(fixture::adjacent_hubs());
  ASSERT_TRUE(w.has_value());
  ASSERT_TRUE(w->deleted_edge.has_value());
  EXPECT_EQ(*w->deleted_edge, (Edge{2, 3}));
  EXPECT_TRUE(verify_proper_subgraph_witness(fixture::adjacent_hubs(), *w));
}

TEST(ProperSubgraph, MatchesBruteForceUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      for_each_graph(n, m, [&](const Graph& g) {
        const auto w = find_proper_subgraph_min_degree3(g);
        ASSERT_EQ(w.has_value(), oracle::proper_subgraph_min_degree3(g));
        if (w) {
          EXPECT_TRUE(verify_proper_subgraph_witness(g, *w));
        }
      });
    }
  }
}

TEST(ProperSubgraph, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    const int n = 5 + t % 5;
    std::uniform_int_distribution<int> pick(n, std::min(n * (n - 1) / 2, 3 * n));
    const Graph g = oracle::random_graph_with_edges(n, pick(rng), rng);
    const auto w = find_proper_subgraph_min_degree3(g);
    ASSERT_EQ(w.has_value(), oracle::proper_subgraph_min_degree3(g));
    if (w) {
      EXPECT_TRUE(verify_proper_subgraph_witness(g, *w));
    }
  }
}

namespace {

std::vector<int> recount_forward_degrees(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int d = 0;
    for (std::size_t j = i + 1; j < order.size(); ++j) d += g.has_edge(order[i], order[j]) ? 1 : 0;
    out.push_back(d);
  }
  return out;
}

void expect_ordering_pattern(const Graph& g) {
  const auto co = critical_ordering(g);
  const int n = g.order();
  std::vector<Vertex> sorted = co.order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> ident(static_cast<std::size_t>(n));
  std::iota(ident.begin(), ident.end(), 0);
  ASSERT_EQ(sorted, ident);
  ASSERT_EQ(co.forward_degrees, recount_forward_degrees(g, co.order));
  EXPECT_EQ(co.forward_degrees.front(), 3);
  EXPECT_EQ(co.forward_degrees[static_cast<std::size_t>(n - 2)], 1);
  EXPECT_EQ(co.forward_degrees.back(), 0);
  for (int i = 1; i <= n - 3; ++i) EXPECT_EQ(co.forward_degrees[static_cast<std::size_t>(i)], 2);
  if (n >= 7) {
    EXPECT_GE(g.degree(co.order.back()), 4);
  }
}

}  // namespace

TEST(CriticalOrdering, Wheels) {
  EXPECT_EQ(critical_ordering(wheel(6)).forward_degrees, (std::vector<int>{3, 2, 2, 2, 1, 0}));
  EXPECT_EQ(critical_ordering(wheel(5)).forward_degrees, (std::vector<int>{3, 2, 2, 1, 0}));
  EXPECT_EQ(critical_ordering(wheel(9)).order.back(), 0);
}

TEST(CriticalOrdering, CounterexampleGraph) {
  const Graph g = counterexample_graph(24);
  const auto co = critical_ordering(g);
  const auto fwd = recount_forward_degrees(g, co.order);
  EXPECT_EQ(fwd, co.forward_degrees);
  const int n = g.order();
  EXPECT_EQ(std::count(fwd.begin(), fwd.end(), 3), 1);
  EXPECT_EQ(std::count(fwd.begin(), fwd.end(), 2), n - 3);
  EXPECT_EQ(std::count(fwd.begin(), fwd.end(), 1), 1);
  EXPECT_EQ(std::count(fwd.begin(), fwd.end(), 0), 1);
  EXPECT_GE(g.degree(co.order.back()), 4);
}

TEST(CriticalOrdering, AllCriticalGraphsOnSevenVertices) {
  int seen = 0;
  for (int n = 4; n <= 7; ++n) {
    for_each_graph(n, 2 * n - 2, [&](const Graph& g) {
      if (!is_degree3_critical(g)) return;
      ++seen;
      expect_ordering_pattern(g);
    });
  }
  EXPECT_GT(seen, 0);
}

TEST(CriticalOrdering, RandomCriticalGraphs) {
  std::mt19937 rng(29);
  int seen = 0;
  for (int t = 0; t < 20000 && seen < 100; ++t) {
    const int n = 8 + t % 4;
    const Graph g = oracle::random_graph_with_edges(n, 2 * n - 2, rng);
    if (!is_degree3_critical(g)) continue;
    ++seen;
    expect_ordering_pattern(g);
  }
  EXPECT_GT(seen, 10);
}

TEST(CriticalOrdering, RejectsNonCritical) {
  EXPECT_THROW(critical_ordering(complete_graph(5)), PreconditionError);
  EXPECT_THROW(critical_ordering(cycle_graph(6)), PreconditionError);
}

TEST(Isomorphism, Examples) {
  const Graph w = wheel(6);
  std::vector<Vertex> perm{3, 0, 5, 1, 4, 2};
  EXPECT_TRUE(is_isomorphic(w, w.relabeled(perm)));
  const auto map = find_isomorphism(w, w.relabeled(perm));
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(is_isomorphism(w, w.relabeled(perm), *map));
  EXPECT_FALSE(is_isomorphic(w, fixture::adjacent_hubs()));
  EXPECT_FALSE(is_isomorphic(cycle_graph(5), path_graph(5)));
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(Isomorphism, SizeLimit) {
  EXPECT_THROW(is_isomorphic(cycle_graph(13), cycle_graph(13)), PreconditionError);
  EXPECT_TRUE(is_isomorphic(cycle_graph(13), cycle_graph(13), 13));
}

TEST(Isomorphism, RandomRelabelings) {
  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(10, 0.4, rng);
    std::vector<Vertex> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    const auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map.has_value());
    EXPECT_TRUE(is_isomorphism(g, h, *map));
  }
}
