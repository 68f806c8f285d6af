#pragma once

// Hand-entered reference graphs.

#include "deg3lab/graph.hpp"

namespace fixture {

using deg3lab::Graph;

// Pentagon P0..P4 = 0..4 and C = 5; P2 and P3 are the adjacent degree-4 pair.
inline Graph adjacent_hubs() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {2, 5}, {3, 5}, {1, 3}, {2, 4}});
}

// A = 0, L = 1, a1..a3 = 2..4, R = 5, b1..b4 = 6..9, B = 10.
inline Graph eleven_vertex_glued_a() {
  return Graph(11, {{0, 1}, {0, 4}, {0, 5}, {0, 9},
                    {1, 2}, {2, 3}, {3, 4},
                    {1, 10}, {2, 10}, {3, 10}, {4, 10}, {5, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10},
                    {5, 6}, {6, 7}, {7, 8}, {8, 9}});
}

inline Graph eleven_vertex_glued_b() {
  return Graph(11, {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9},
                    {1, 2}, {2, 3}, {3, 4},
                    {1, 10}, {2, 10}, {3, 10}, {4, 10}, {5, 10}, {9, 10},
                    {5, 6}, {6, 7}, {7, 8}, {8, 9}});
}

}  // namespace fixture
