#pragma once

#include "spinmod/graph.hpp"

namespace fixtures {

using spinmod::Graph;

// Two weight-0 vertices, three parallel edges e1, e2, e3 (indices 0, 1, 2).
inline Graph theta() { return Graph::from_edges({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {}); }

// Loops l1 at u and l2 at v (indices 0, 2), bridge (index 1).
inline Graph dumbbell() { return Graph::from_edges({0, 0}, {{0, 0}, {0, 1}, {1, 1}}, {}); }

// Single vertex of weight g with n legs.
inline Graph g_w(int g, int n) { return Graph::from_edges({g}, {}, std::vector<int>(n, 0)); }

// Weight-0 vertex, one loop, one leg.
inline Graph loop1() { return Graph::from_edges({0}, {{0, 0}}, {0}); }

// Weight-0 vertex with k loops.
inline Graph rose(int k, int weight = 0) {
  std::vector<std::pair<int, int>> e(k, {0, 0});
  return Graph::from_edges({weight}, e, {});
}

// Two weight-0 vertices joined by k parallel edges.
inline Graph banana(int k, int w0 = 0, int w1 = 0) {
  std::vector<std::pair<int, int>> e(k, {0, 1});
  return Graph::from_edges({w0, w1}, e, {});
}

}  // namespace fixtures
