#pragma once

#include <algorithm>
#include <vector>

#include "domcube/errors.hpp"
#include "domcube/graph.hpp"

namespace domcube {

inline constexpr int kMaxIsomorphismOrder = 12;

// Adjacency-preserving bijection search, backtracking vertex by vertex with
// degree pruning. Fine up to 12 vertices; refuse beyond.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder)
    raise(Errc::order_too_large, "isomorphism search caps at " +
                                     std::to_string(kMaxIsomorphismOrder) + " vertices");
  int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;

  std::vector<int> deg_a(static_cast<std::size_t>(n)), deg_b(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    deg_a[static_cast<std::size_t>(v)] = a.degree(v);
    deg_b[static_cast<std::size_t>(v)] = b.degree(v);
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] ||
          deg_a[static_cast<std::size_t>(v)] != deg_b[static_cast<std::size_t>(w)])
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = a.has_edge(u, v) == b.has_edge(map[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace domcube
