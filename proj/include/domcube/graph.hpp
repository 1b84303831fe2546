#pragma once

#include <utility>
#include <vector>

#include "domcube/errors.hpp"
#include "domcube/vertex_set.hpp"

namespace domcube {

using Edge = std::pair<int, int>;

// Simple undirected graph on 1..64 vertices, stored as per-vertex
// open-neighborhood bitsets. Immutable after construction.
class Graph {
 public:
  Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 1 || n > VertexSet::capacity)
      raise(Errc::order_out_of_range, "graph order must be in 1..64, got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return neighbors(v).count(); }
  bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
  VertexSet vertex_mask() const { return VertexSet::universe(n_); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  // Edges as (u,v) with u < v, ascending.
  std::vector<Edge> edge_list() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void add_edge(int u, int v) {
    if (u == v)
      raise(Errc::invalid_edge, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      raise(Errc::invalid_edge, "endpoint out of range in edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") for order " + std::to_string(n_));
    adj_[static_cast<std::size_t>(u)] = adj_[static_cast<std::size_t>(u)].with(v);
    adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].with(u);
  }

  int n_;
  std::vector<VertexSet> adj_;
};

inline Graph new_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    raise(Errc::vertex_out_of_range,
          "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
}

// N[v] = N(v) + v.
inline VertexSet closed_neighborhood(const Graph& g, int v) {
  check_vertex(g, v);
  return g.neighbors(v).with(v);
}

// Vertices of degree exactly 1.
inline VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out = out.with(v);
  return out;
}

enum class LeafTag { Isolated, Leaf, AdjacentToLeaf, Neither };

// First applicable tag in order Isolated, Leaf, AdjacentToLeaf, Neither.
inline std::vector<LeafTag> leaf_status(const Graph& g) {
  VertexSet leaf_set = leaves(g);
  std::vector<LeafTag> tags(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0)
      tags[v] = LeafTag::Isolated;
    else if (leaf_set.contains(v))
      tags[v] = LeafTag::Leaf;
    else if (!(g.neighbors(v) & leaf_set).empty())
      tags[v] = LeafTag::AdjacentToLeaf;
    else
      tags[v] = LeafTag::Neither;
  }
  return tags;
}

struct ComponentPartition {
  std::vector<int> labels;  // per-vertex component index, 0..count-1
  int count = 0;
};

inline ComponentPartition connected_components(const Graph& g) {
  ComponentPartition p;
  p.labels.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue;
  for (int start = 0; start < g.order(); ++start) {
    if (p.labels[start] >= 0) continue;
    int label = p.count++;
    p.labels[start] = label;
    queue.assign(1, start);
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int w : g.neighbors(u)) {
        if (p.labels[w] < 0) {
          p.labels[w] = label;
          queue.push_back(w);
        }
      }
    }
  }
  return p;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count == 1; }

// Attach one new pendant vertex to every vertex of g; new vertex n+i hangs off i.
inline Graph corona_k1(const Graph& g) {
  int n = g.order();
  if (2 * n > VertexSet::capacity)
    raise(Errc::capacity_exceeded, "corona of order " + std::to_string(n) + " exceeds 64 vertices");
  std::vector<Edge> edges = g.edge_list();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
  return Graph(2 * n, edges);
}

// Attach one pendant to every vertex that is neither a leaf nor adjacent to
// a leaf, and to every isolated vertex. The result has no Isolated and no
// Neither tags; vertices already satisfying the condition gain nothing.
inline Graph leaf_completion(const Graph& g) {
  std::vector<LeafTag> tags = leaf_status(g);
  int extra = 0;
  for (LeafTag t : tags)
    if (t == LeafTag::Neither || t == LeafTag::Isolated) ++extra;
  int n = g.order();
  if (n + extra > VertexSet::capacity)
    raise(Errc::capacity_exceeded, "leaf completion needs " + std::to_string(n + extra) + " vertices");
  std::vector<Edge> edges = g.edge_list();
  int next = n;
  for (int v = 0; v < n; ++v)
    if (tags[v] == LeafTag::Neither || tags[v] == LeafTag::Isolated) edges.emplace_back(v, next++);
  return Graph(n + extra, edges);
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_index;  // new vertex i was host vertex original_index[i]
};

// Induced subgraph on a nonempty vertex subset, relabeled 0..|S|-1 in
// ascending host order.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  std::vector<int> order;
  std::vector<int> to_new(static_cast<std::size_t>(g.order()), -1);
  for (int v : s) {
    to_new[v] = static_cast<int>(order.size());
    order.push_back(v);
  }
  std::vector<Edge> edges;
  for (int v : s)
    for (int w : g.neighbors(v) & s)
      if (v < w) edges.emplace_back(to_new[v], to_new[w]);
  return InducedSubgraph{Graph(static_cast<int>(order.size()), edges), std::move(order)};
}

}  // namespace domcube
