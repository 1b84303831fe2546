#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "domcube/errors.hpp"
#include "domcube/graph.hpp"
#include "domcube/vertex_set.hpp"

namespace domcube {

// Anything with an order and per-vertex neighbor ranges: Graph, DomGraph,
// or a test adapter.
template <typename G>
concept VertexGraph = requires(const G& g, int v) {
  { g.order() } -> std::convertible_to<int>;
  { *std::begin(g.neighbors(v)) } -> std::convertible_to<int>;
};

inline constexpr int kUnreachable = -1;

// Hop counts between all vertex pairs; kUnreachable across components.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;

  int at(int i, int j) const { return d[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
  int& at(int i, int j) { return d[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
  bool all_finite() const {
    for (int x : d)
      if (x == kUnreachable) return false;
    return true;
  }
};

template <VertexGraph G>
DistanceMatrix all_pairs_distances(const G& g) {
  int n = g.order();
  DistanceMatrix m;
  m.n = n;
  m.d.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable);
  std::vector<int> frontier;
  for (int root = 0; root < n; ++root) {
    m.at(root, root) = 0;
    frontier.assign(1, root);
    std::size_t head = 0;
    while (head < frontier.size()) {
      int u = frontier[head++];
      int du = m.at(root, u);
      for (int w : g.neighbors(u)) {
        if (m.at(root, w) == kUnreachable) {
          m.at(root, w) = du + 1;
          frontier.push_back(w);
        }
      }
    }
  }
  return m;
}

// All vertices lying on geodesics between each pair of {a,b,c}.
inline std::vector<int> medians_of_triple(const DistanceMatrix& dist, int a, int b, int c) {
  if (dist.at(a, b) == kUnreachable || dist.at(a, c) == kUnreachable ||
      dist.at(b, c) == kUnreachable)
    raise(Errc::disconnected_triple, "triple spans more than one component");
  std::vector<int> out;
  for (int m = 0; m < dist.n; ++m) {
    if (dist.at(a, m) == kUnreachable) continue;
    if (dist.at(a, m) + dist.at(m, b) == dist.at(a, b) &&
        dist.at(a, m) + dist.at(m, c) == dist.at(a, c) &&
        dist.at(b, m) + dist.at(m, c) == dist.at(b, c))
      out.push_back(m);
  }
  return out;
}

enum class MedianReason { median, disconnected, non_unique_triple };

struct MedianCheck {
  bool value = false;
  MedianReason reason = MedianReason::median;
  std::optional<std::array<int, 3>> witness;  // first triple with 0 or >= 2 medians
};

inline constexpr int kDefaultMetricBudget = 4096;

// Brute-force median recognition: every vertex triple must have exactly one
// median. Deliberately the O(V^4) distance-table scan; this is the oracle the
// rest of the code is measured against.
template <VertexGraph G>
MedianCheck is_median_graph(const G& g, int budget = kDefaultMetricBudget) {
  int n = g.order();
  if (n > budget)
    raise(Errc::budget_exceeded,
          "order " + std::to_string(n) + " exceeds median-check budget " + std::to_string(budget));
  DistanceMatrix dist = all_pairs_distances(g);
  if (!dist.all_finite()) return {false, MedianReason::disconnected, std::nullopt};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int found = 0;
        for (int m = 0; m < n && found < 2; ++m) {
          if (dist.at(a, m) + dist.at(m, b) == dist.at(a, b) &&
              dist.at(a, m) + dist.at(m, c) == dist.at(a, c) &&
              dist.at(b, m) + dist.at(m, c) == dist.at(b, c))
            ++found;
        }
        if (found != 1)
          return {false, MedianReason::non_unique_triple, std::array<int, 3>{a, b, c}};
      }
  return {true, MedianReason::median, std::nullopt};
}

// Edges xy, uv are related when d(x,u)+d(y,v) != d(x,v)+d(y,u). Reflexive and
// symmetric by construction; transitive exactly on partial cubes (within the
// bipartite world).
struct ThetaRelation {
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> related;  // index pairs (i,j), i < j
};

namespace detail {

inline bool theta_related(const DistanceMatrix& dist, Edge e, Edge f) {
  auto [x, y] = e;
  auto [u, v] = f;
  return dist.at(x, u) + dist.at(y, v) != dist.at(x, v) + dist.at(y, u);
}

template <VertexGraph G>
std::vector<Edge> sorted_edges(const G& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int w : g.neighbors(u))
      if (u < w) edges.emplace_back(u, w);
  return edges;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

template <VertexGraph G>
bool is_bipartite(const G& g) {
  int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    stack.assign(1, start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(u)] ^ 1;
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Classes of the transitive closure of the relation; ids are dense, numbered
// by first edge occurrence.
inline std::vector<int> closure_classes(const std::vector<Edge>& edges,
                                        const DistanceMatrix& dist, int* count_out) {
  int m = static_cast<int>(edges.size());
  UnionFind uf(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (theta_related(dist, edges[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(j)]))
        uf.unite(i, j);
  std::vector<int> id(static_cast<std::size_t>(m), -1);
  int count = 0;
  for (int i = 0; i < m; ++i) {
    int root = uf.find(i);
    if (id[static_cast<std::size_t>(root)] < 0) id[static_cast<std::size_t>(root)] = count++;
    id[static_cast<std::size_t>(i)] = id[static_cast<std::size_t>(root)];
  }
  if (count_out) *count_out = count;
  return id;
}

}  // namespace detail

template <VertexGraph G>
ThetaRelation theta_relation(const G& g) {
  ThetaRelation rel;
  rel.edges = detail::sorted_edges(g);
  DistanceMatrix dist = all_pairs_distances(g);
  int m = static_cast<int>(rel.edges.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (detail::theta_related(dist, rel.edges[static_cast<std::size_t>(i)],
                                rel.edges[static_cast<std::size_t>(j)]))
        rel.related.emplace_back(i, j);
  return rel;
}

enum class PartialCubeReason { partial_cube, disconnected, not_bipartite, theta_not_transitive };

struct PartialCubeCheck {
  bool value = false;
  PartialCubeReason reason = PartialCubeReason::partial_cube;
};

// Connected + bipartite + transitive edge relation recognizes isometric
// hypercube subgraphs.
template <VertexGraph G>
PartialCubeCheck is_partial_cube(const G& g, int budget = kDefaultMetricBudget) {
  int n = g.order();
  if (n > budget)
    raise(Errc::budget_exceeded,
          "order " + std::to_string(n) + " exceeds partial-cube budget " + std::to_string(budget));
  DistanceMatrix dist = all_pairs_distances(g);
  if (!dist.all_finite()) return {false, PartialCubeReason::disconnected};
  if (!detail::is_bipartite(g)) return {false, PartialCubeReason::not_bipartite};
  std::vector<Edge> edges = detail::sorted_edges(g);
  std::vector<int> cls = detail::closure_classes(edges, dist, nullptr);
  // Transitive iff every pair inside one closure class is directly related.
  int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (cls[static_cast<std::size_t>(i)] == cls[static_cast<std::size_t>(j)] &&
          !detail::theta_related(dist, edges[static_cast<std::size_t>(i)],
                                 edges[static_cast<std::size_t>(j)]))
        return {false, PartialCubeReason::theta_not_transitive};
  return {true, PartialCubeReason::partial_cube};
}

// Vertex labels over one coordinate per edge class, with graph distance equal
// to Hamming distance everywhere (verified before returning). Vertex 0 gets
// the empty label.
template <VertexGraph G>
std::vector<VertexSet> hypercube_labeling(const G& g, int budget = kDefaultMetricBudget) {
  PartialCubeCheck pc = is_partial_cube(g, budget);
  if (!pc.value) raise(Errc::not_partial_cube, "input graph is not a partial cube");
  int n = g.order();
  DistanceMatrix dist = all_pairs_distances(g);
  std::vector<Edge> edges = detail::sorted_edges(g);
  int classes = 0;
  std::vector<int> cls = detail::closure_classes(edges, dist, &classes);
  if (classes > VertexSet::capacity)
    raise(Errc::too_many_classes, std::to_string(classes) + " edge classes exceed 64 coordinates");

  // Class lookup per directed edge, then one BFS from the base vertex
  // flipping the coordinate of each tree edge.
  std::vector<std::vector<std::pair<int, int>>> class_of(static_cast<std::size_t>(n));
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    auto [u, v] = edges[static_cast<std::size_t>(i)];
    class_of[static_cast<std::size_t>(u)].emplace_back(v, cls[static_cast<std::size_t>(i)]);
    class_of[static_cast<std::size_t>(v)].emplace_back(u, cls[static_cast<std::size_t>(i)]);
  }
  std::vector<VertexSet> labels(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> frontier{0};
  seen[0] = true;
  std::size_t head = 0;
  while (head < frontier.size()) {
    int u = frontier[head++];
    for (auto [w, c] : class_of[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        labels[static_cast<std::size_t>(w)] = labels[static_cast<std::size_t>(u)] ^ VertexSet::single(c);
        frontier.push_back(w);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((labels[static_cast<std::size_t>(i)] ^ labels[static_cast<std::size_t>(j)]).count() !=
          dist.at(i, j))
        throw std::logic_error("hypercube labeling failed distance verification");
  return labels;
}

}  // namespace domcube
