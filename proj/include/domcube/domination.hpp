#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domcube/errors.hpp"
#include "domcube/graph.hpp"
#include "domcube/vertex_set.hpp"

namespace domcube {

// Subsets enumerated per call before BudgetExceeded; 2^16 pins desk scale.
inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 16;

namespace detail {

inline void check_subset_budget(int n, std::uint64_t budget) {
  if (n > 63 || (std::uint64_t{1} << n) > budget)
    raise(Errc::budget_exceeded, "2^" + std::to_string(n) + " subsets exceed budget " +
                                     std::to_string(budget));
}

inline std::vector<VertexSet> closed_neighborhoods(const Graph& g) {
  std::vector<VertexSet> closed(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) closed[v] = g.neighbors(v).with(v);
  return closed;
}

inline VertexSet coverage(const std::vector<VertexSet>& closed, VertexSet s) {
  VertexSet c;
  for (int v : s) c = c | closed[static_cast<std::size_t>(v)];
  return c;
}

}  // namespace detail

// True iff the closed neighborhoods of S cover every vertex.
inline bool is_dominating(const Graph& g, VertexSet s) {
  assert(s.subset_of(g.vertex_mask()));
  VertexSet cover;
  for (int v : s) cover = cover | g.neighbors(v).with(v);
  return cover == g.vertex_mask();
}

// Dominating and no single-element removal stays dominating.
inline bool is_minimal_dominating(const Graph& g, VertexSet s) {
  if (!is_dominating(g, s)) return false;
  for (int v : s)
    if (is_dominating(g, s.without(v))) return false;
  return true;
}

// Family of dominating sets of one host, in canonical order
// (ascending popcount, then ascending bit word).
struct DomFamily {
  int host_order = 0;
  std::vector<VertexSet> members;

  DomFamily() = default;
  DomFamily(const Graph& g, std::vector<VertexSet> sets)
      : host_order(g.order()), members(std::move(sets)) {
    for (VertexSet s : members)
      if (!is_dominating(g, s)) raise(Errc::invalid_edge, "non-dominating member in DomFamily");
  }

  std::size_t size() const { return members.size(); }
  bool contains(VertexSet s) const {
    return std::binary_search(members.begin(), members.end(), s,
                              [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
  }
};

// All dominating sets of cardinality <= k.
inline DomFamily enumerate_dominating(const Graph& g, int k,
                                      std::uint64_t budget = kDefaultSubsetBudget) {
  assert(k >= 0 && k <= g.order());
  int n = g.order();
  detail::check_subset_budget(n, budget);
  auto closed = detail::closed_neighborhoods(g);
  VertexSet all = g.vertex_mask();
  std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(n + 1));
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
    VertexSet s(word);
    int size = s.count();
    if (size > k) continue;
    if (detail::coverage(closed, s) == all) by_size[static_cast<std::size_t>(size)].push_back(s);
  }
  std::vector<VertexSet> members;
  for (auto& bucket : by_size) members.insert(members.end(), bucket.begin(), bucket.end());
  return DomFamily(g, std::move(members));
}

// All minimal dominating sets.
inline DomFamily enumerate_minimal_dominating(const Graph& g,
                                              std::uint64_t budget = kDefaultSubsetBudget) {
  int n = g.order();
  detail::check_subset_budget(n, budget);
  auto closed = detail::closed_neighborhoods(g);
  VertexSet all = g.vertex_mask();
  std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(n + 1));
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
    VertexSet s(word);
    if (detail::coverage(closed, s) != all) continue;
    bool minimal = true;
    for (int v : s) {
      if (detail::coverage(closed, s.without(v)) == all) {
        minimal = false;
        break;
      }
    }
    if (minimal) by_size[static_cast<std::size_t>(s.count())].push_back(s);
  }
  std::vector<VertexSet> members;
  for (auto& bucket : by_size) members.insert(members.end(), bucket.begin(), bucket.end());
  return DomFamily(g, std::move(members));
}

inline int domination_number(const Graph& g, std::uint64_t budget = kDefaultSubsetBudget) {
  int n = g.order();
  detail::check_subset_budget(n, budget);
  auto closed = detail::closed_neighborhoods(g);
  VertexSet all = g.vertex_mask();
  int best = n;  // V(G) always dominates
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
    VertexSet s(word);
    if (s.count() < best && detail::coverage(closed, s) == all) best = s.count();
  }
  return best;
}

namespace detail {

// Smallest dominating subset of `allowed`, scanning cardinalities upward and
// stopping at the first hit; -1 when none dominates.
inline int min_dominating_within(const Graph& g, VertexSet allowed) {
  auto closed = closed_neighborhoods(g);
  VertexSet all = g.vertex_mask();
  if (coverage(closed, allowed) != all) return -1;
  std::vector<int> pool;
  for (int v : allowed) pool.push_back(v);
  int m = static_cast<int>(pool.size());
  std::vector<int> pick;
  // Combinations of `pool` of a fixed size, lexicographic.
  auto search = [&](auto&& self, int size, int start, VertexSet acc) -> bool {
    if (static_cast<int>(pick.size()) == size) return coverage(closed, acc) == all;
    for (int i = start; i < m; ++i) {
      pick.push_back(pool[i]);
      if (self(self, size, i + 1, acc.with(pool[i]))) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= m; ++size) {
    pick.clear();
    if (search(search, size, 0, VertexSet{})) return size;
  }
  return -1;
}

}  // namespace detail

// Minimum size of a dominating set disjoint from some minimum dominating set.
inline int inverse_domination_number(const Graph& g, std::uint64_t budget = kDefaultSubsetBudget) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      raise(Errc::isolated_vertex_present, "vertex " + std::to_string(v) + " is isolated");
  int gamma = domination_number(g, budget);
  DomFamily dom = enumerate_dominating(g, gamma, budget);
  int best = -1;
  for (VertexSet d : dom.members) {
    if (d.count() != gamma) continue;
    int b = detail::min_dominating_within(g, g.vertex_mask() - d);
    if (b >= 0 && (best < 0 || b < best)) best = b;
  }
  // A graph with no isolated vertex always admits an inverse dominating set.
  if (best < 0) throw std::logic_error("no inverse dominating set despite no isolated vertex");
  return best;
}

// Vertices dominated by v and by no other member of D (v itself qualifies).
inline VertexSet private_neighbors(const Graph& g, VertexSet d, int v) {
  check_vertex(g, v);
  if (!d.contains(v))
    raise(Errc::vertex_not_in_set, "vertex " + std::to_string(v) + " not in the given set");
  VertexSet others_cover;
  for (int u : d.without(v)) others_cover = others_cover | g.neighbors(u).with(u);
  return closed_neighborhood(g, v) - others_cover;
}

// Elementwise majority of three sets: (A&B)|(A&C)|(B&C).
inline VertexSet star(VertexSet a, VertexSet b, VertexSet c) {
  return (a & b) | (a & c) | (b & c);
}

using StarTriple = std::array<VertexSet, 3>;

struct MdsComplementCheck {
  bool holds = true;
  std::optional<VertexSet> witness;  // first minimal dominating set whose complement is not one
};

// Is the complement of every minimal dominating set again a minimal
// dominating set?
inline MdsComplementCheck is_mdscomds(const Graph& g, std::uint64_t budget = kDefaultSubsetBudget) {
  DomFamily mdom = enumerate_minimal_dominating(g, budget);
  for (VertexSet m : mdom.members) {
    if (!is_minimal_dominating(g, g.vertex_mask() - m)) return {false, m};
  }
  return {true, std::nullopt};
}

// Does every vertex pass the isolated / leaf / adjacent-to-leaf screen?
inline bool is_dm_characterized(const Graph& g) {
  for (LeafTag t : leaf_status(g))
    if (t == LeafTag::Neither) return false;
  return true;
}

struct StarCheck {
  bool holds = true;
  std::optional<StarTriple> witness;  // first triple whose star fails to dominate
};

// Star of every triple of minimal dominating sets dominates? Triples range
// over canonical indices i <= j <= l; repeats are trivially safe but kept.
inline StarCheck is_dm_star(const Graph& g, std::uint64_t budget = kDefaultSubsetBudget) {
  DomFamily mdom = enumerate_minimal_dominating(g, budget);
  std::size_t m = mdom.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t l = j; l < m; ++l) {
        VertexSet s = star(mdom.members[i], mdom.members[j], mdom.members[l]);
        if (!is_dominating(g, s))
          return {false, StarTriple{mdom.members[i], mdom.members[j], mdom.members[l]}};
      }
  return {true, std::nullopt};
}

// Same star condition quantified over all dominating (not just minimal)
// triples; equivalent to is_dm_star and used to cross-check that equivalence.
inline bool star_condition_over_dominating(const Graph& g,
                                           std::uint64_t budget = kDefaultSubsetBudget) {
  DomFamily dom = enumerate_dominating(g, g.order(), budget);
  std::size_t m = dom.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t l = j; l < m; ++l)
        if (!is_dominating(g, star(dom.members[i], dom.members[j], dom.members[l]))) return false;
  return true;
}

// Builds three dominating sets whose star is not dominating, by case analysis
// around the first vertex that is neither a leaf nor adjacent to a leaf.
// Requires: no isolated vertex, such a vertex exists, and G is not a 4-cycle.
inline StarTriple find_non_median_witness(const Graph& g,
                                          std::uint64_t budget = kDefaultSubsetBudget) {
  int n = g.order();
  std::vector<LeafTag> tags = leaf_status(g);
  int center = -1;
  for (int v = 0; v < n; ++v) {
    if (tags[v] == LeafTag::Isolated)
      raise(Errc::precondition_violated, "graph has an isolated vertex");
    if (center < 0 && tags[v] == LeafTag::Neither) center = v;
  }
  if (center < 0)
    raise(Errc::precondition_violated, "every vertex is a leaf or adjacent to a leaf");
  bool two_regular = true;
  for (int v = 0; v < n; ++v) two_regular = two_regular && g.degree(v) == 2;
  if (n == 4 && two_regular && is_connected(g))
    raise(Errc::precondition_violated, "graph is the 4-cycle");

  VertexSet h = g.neighbors(center);
  VertexSet l = g.vertex_mask() - closed_neighborhood(g, center);
  VertexSet h1;
  for (int w : h)
    if (!(g.neighbors(w) & l).empty()) h1 = h1.with(w);
  VertexSet h2 = h - h1;

  StarTriple out;
  if (h2.empty()) {
    // Every neighbor of the center reaches outside its closed neighborhood.
    int w1 = h.first();
    int w2 = h.without(w1).first();
    out = {l.with(center), l.with(w1), l.with(w2)};
  } else {
    bool all_h2_touch_h1 = true;
    for (int u : h2)
      if ((g.neighbors(u) & h1).empty()) all_h2_touch_h1 = false;
    if (all_h2_touch_h1) {
      out = {l.with(center), l | h1, l | h2};
    } else {
      // Some stranded neighbor forces an edge inside <H2>; two distinct
      // minimal dominating sets of that subgraph split the majority.
      InducedSubgraph sub = induced_subgraph(g, h2);
      DomFamily mdom = enumerate_minimal_dominating(sub.graph, budget);
      if (mdom.size() < 2)
        throw std::logic_error("stranded-neighbor subgraph lost its second minimal set");
      VertexSet m1, m2;
      for (int x : mdom.members[0]) m1 = m1.with(sub.original_index[static_cast<std::size_t>(x)]);
      for (int x : mdom.members[1]) m2 = m2.with(sub.original_index[static_cast<std::size_t>(x)]);
      out = {l.with(center), l | m1, l | m2};
    }
  }

  if (!is_dominating(g, out[0]) || !is_dominating(g, out[1]) || !is_dominating(g, out[2]) ||
      is_dominating(g, star(out[0], out[1], out[2])))
    throw std::logic_error("witness construction produced an invalid triple");
  return out;
}

// Joint outcome of the three classification predicates on one host.
struct Classification {
  bool dm = false;
  bool mdscomds = false;
  bool leaf_condition = false;
  std::optional<StarTriple> star_witness;    // present when dm is false
  std::optional<VertexSet> mdscomds_witness;  // present when mdscomds is false
};

inline Classification classify(const Graph& g, std::uint64_t budget = kDefaultSubsetBudget) {
  Classification c;
  StarCheck dm = is_dm_star(g, budget);
  MdsComplementCheck co = is_mdscomds(g, budget);
  c.dm = dm.holds;
  c.star_witness = dm.witness;
  c.mdscomds = co.holds;
  c.mdscomds_witness = co.witness;
  c.leaf_condition = is_dm_characterized(g);
  return c;
}

}  // namespace domcube
