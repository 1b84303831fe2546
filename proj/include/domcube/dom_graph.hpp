#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domcube/domination.hpp"
#include "domcube/errors.hpp"
#include "domcube/graph.hpp"
#include "domcube/vertex_set.hpp"

namespace domcube {

// Dominating sets that may populate one dominating graph; 2^16 matches the
// subset budget (full construction is practical up to 16 host vertices).
inline constexpr std::uint64_t kDefaultVertexBudget = std::uint64_t{1} << 16;

// The graph D_k(G): one vertex per dominating set of size <= k, edges between
// sets whose symmetric difference is a single vertex. Immutable after build.
class DomGraph {
 public:
  DomGraph(Graph host, int k, std::vector<VertexSet> labels,
           std::vector<std::vector<int>> adjacency)
      : host_(std::move(host)),
        k_(k),
        labels_(std::move(labels)),
        adj_(std::move(adjacency)) {}

  int order() const { return static_cast<int>(labels_.size()); }
  const Graph& host() const { return host_; }
  int cap() const { return k_; }
  bool is_full() const { return k_ >= host_.order(); }
  VertexSet label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<VertexSet>& labels() const { return labels_; }
  const std::vector<int>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }

  int edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.size();
    return static_cast<int>(total / 2);
  }

  std::optional<int> index_of(VertexSet s) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), s,
                               [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
    if (it == labels_.end() || *it != s) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }

  // Forgets the labels; usable wherever a plain Graph is expected (order <= 64).
  Graph skeleton() const {
    if (order() == 0) raise(Errc::empty_graph, "skeleton of an empty dominating graph");
    if (order() > VertexSet::capacity)
      raise(Errc::capacity_exceeded,
            "dominating graph of order " + std::to_string(order()) + " exceeds 64 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < order(); ++i)
      for (int j : neighbors(i))
        if (i < j) edges.emplace_back(i, j);
    return Graph(order(), edges);
  }

 private:
  Graph host_;
  int k_;
  std::vector<VertexSet> labels_;
  std::vector<std::vector<int>> adj_;
};

// Builds D_k(G). Labels come out in canonical order; edges link each set to
// its one-vertex extensions present in the family.
inline DomGraph build_dominating_graph(const Graph& g, int k,
                                       std::uint64_t subset_budget = kDefaultSubsetBudget,
                                       std::uint64_t vertex_budget = kDefaultVertexBudget) {
  DomFamily family = enumerate_dominating(g, k, subset_budget);
  if (family.size() > vertex_budget)
    raise(Errc::budget_exceeded, std::to_string(family.size()) +
                                     " dominating sets exceed vertex budget " +
                                     std::to_string(vertex_budget));
  int m = static_cast<int>(family.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));

  // Bucket boundaries by popcount; members within a bucket are word-sorted.
  int n = g.order();
  std::vector<int> bucket_start(static_cast<std::size_t>(n + 2), m);
  for (int i = m - 1; i >= 0; --i)
    bucket_start[static_cast<std::size_t>(family.members[static_cast<std::size_t>(i)].count())] = i;
  for (int size = n; size >= 0; --size)
    bucket_start[static_cast<std::size_t>(size)] = std::min(
        bucket_start[static_cast<std::size_t>(size)], bucket_start[static_cast<std::size_t>(size + 1)]);

  auto find_in_bucket = [&](VertexSet s) -> int {
    int size = s.count();
    auto first = family.members.begin() + bucket_start[static_cast<std::size_t>(size)];
    auto last = family.members.begin() + bucket_start[static_cast<std::size_t>(size + 1)];
    auto it = std::lower_bound(first, last, s,
                               [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    if (it == last || *it != s) return -1;
    return static_cast<int>(it - family.members.begin());
  };

  for (int i = 0; i < m; ++i) {
    VertexSet s = family.members[static_cast<std::size_t>(i)];
    if (s.count() >= k) continue;  // no room for a one-vertex extension
    for (int v : g.vertex_mask() - s) {
      int j = find_in_bucket(s.with(v));
      if (j >= 0) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return DomGraph(g, k, std::move(family.members), std::move(adj));
}

inline DomGraph build_full_dominating_graph(const Graph& g,
                                            std::uint64_t subset_budget = kDefaultSubsetBudget,
                                            std::uint64_t vertex_budget = kDefaultVertexBudget) {
  return build_dominating_graph(g, g.order(), subset_budget, vertex_budget);
}

namespace detail {

inline void require_full(const DomGraph& h, const char* op) {
  if (!h.is_full())
    raise(Errc::not_full_dominating_graph,
          std::string(op) + " requires the full dominating graph (k = |G|)");
}

}  // namespace detail

// Shortest path between two vertices of a full dominating graph: add the
// missing elements in ascending vertex order, then remove the extra ones in
// ascending vertex order. Length is the Hamming distance of the labels.
inline std::vector<int> geodesic(const DomGraph& h, int i, int j) {
  detail::require_full(h, "geodesic");
  VertexSet from = h.label(i);
  VertexSet to = h.label(j);
  std::vector<int> path{i};
  VertexSet current = from;
  auto step_to = [&](VertexSet next) {
    // Phase 1 keeps `from` inside, phase 2 keeps `to` inside, so every
    // intermediate dominates and must be a vertex of the full graph.
    auto idx = h.index_of(next);
    if (!idx) throw std::logic_error("geodesic intermediate missing from dominating graph");
    current = next;
    path.push_back(*idx);
  };
  for (int v : to - from) step_to(current.with(v));
  for (int v : from - to) step_to(current.without(v));
  return path;
}

// Majority label of a vertex triple; the caller decides whether the set is
// itself a vertex of H (and hence realizes a median).
inline VertexSet median_candidate(const DomGraph& h, int i, int j, int l) {
  return star(h.label(i), h.label(j), h.label(l));
}

inline std::vector<int> bfs_distances(const DomGraph& h, int root) {
  std::vector<int> dist(static_cast<std::size_t>(h.order()), -1);
  std::vector<int> frontier{root};
  dist[static_cast<std::size_t>(root)] = 0;
  std::size_t head = 0;
  while (head < frontier.size()) {
    int u = frontier[head++];
    for (int w : h.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const DomGraph& h) {
  if (h.order() == 0) raise(Errc::empty_graph, "connectivity of an empty dominating graph");
  auto dist = bfs_distances(h, 0);
  for (int d : dist)
    if (d < 0) return false;
  return true;
}

// Does hop distance equal Hamming distance of labels for every pair? True
// certifies that the label map is an isometric hypercube embedding.
inline bool check_hamming_isometry(const DomGraph& h) {
  detail::require_full(h, "check_hamming_isometry");
  for (int i = 0; i < h.order(); ++i) {
    auto dist = bfs_distances(h, i);
    for (int j = 0; j < h.order(); ++j)
      if (dist[static_cast<std::size_t>(j)] != (h.label(i) ^ h.label(j)).count()) return false;
  }
  return true;
}

// One-line report: "order=N size=M connected=... isometric=...".
// The last two read n/a when undefined (empty graph / partial cap).
inline std::string summary_line(const DomGraph& h) {
  std::string out = "order=" + std::to_string(h.order()) + " size=" + std::to_string(h.edge_count());
  if (h.order() == 0)
    out += " connected=n/a";
  else
    out += std::string(" connected=") + (is_connected(h) ? "true" : "false");
  if (!h.is_full() || h.order() == 0)
    out += " isometric=n/a";
  else
    out += std::string(" isometric=") + (check_hamming_isometry(h) ? "true" : "false");
  return out;
}

}  // namespace domcube
