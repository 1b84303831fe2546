#pragma once

#include <vector>

#include "domcube/graph.hpp"

namespace domcube {

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// K_{1,leaves}: vertex 0 is the center.
inline Graph star_graph(int leaf_count) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaf_count; ++v) edges.emplace_back(0, v);
  return Graph(leaf_count + 1, edges);
}

inline Graph edgeless_graph(int n) { return Graph(n, {}); }

// Seven vertices: a triangle 0-1-2 with two pendants on 0 and two on 1.
// Its domination number (2) and inverse domination number (5) sum to the
// order even though vertex 2 is neither a leaf nor adjacent to one.
inline Graph inverse_sum_counterexample() {
  return Graph(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});
}

}  // namespace domcube
