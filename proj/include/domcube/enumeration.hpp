#pragma once

#include <cstdint>
#include <vector>

#include "domcube/errors.hpp"
#include "domcube/graph.hpp"

namespace domcube {

inline constexpr int kMaxEnumerationOrder = 7;  // 2^21 labeled graphs

namespace detail {

inline void check_enumeration_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    raise(Errc::order_too_large,
          "labeled enumeration supports 1.." + std::to_string(kMaxEnumerationOrder) +
              " vertices, got " + std::to_string(n));
}

// splitmix64; stateless per-index seeding keeps parallel sweeps reproducible.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

inline std::uint64_t labeled_graph_count(int n) {
  detail::check_enumeration_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// Graph #index under the upper-triangle bit counter: bit t of the index is
// the presence of the t-th pair in column order x(0,1), x(0,2), x(1,2), ...
inline Graph labeled_graph(int n, std::uint64_t index) {
  detail::check_enumeration_order(n);
  std::vector<Edge> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++bit)
      if ((index >> bit) & 1u) edges.emplace_back(row, col);
  return Graph(n, edges);
}

// Uniform random graph (each pair with probability 1/2), fully determined by
// the seed.
inline Graph random_graph(int n, std::uint64_t seed) {
  std::vector<Edge> edges;
  std::uint64_t word = 0;
  int bits_left = 0;
  std::uint64_t counter = seed;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (bits_left == 0) {
        word = detail::mix(counter++);
        bits_left = 64;
      }
      if (word & 1u) edges.emplace_back(row, col);
      word >>= 1;
      --bits_left;
    }
  }
  return Graph(n, edges);
}

}  // namespace domcube
