#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace domcube {

// Subset of the vertices 0..63 of a host graph, one bit per vertex.
// Also used for any small set of indices (hypercube coordinates, etc.).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr int capacity = 64;

  // Low n bits set: the full vertex set of an n-vertex graph.
  static constexpr VertexSet universe(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.bits_ |= std::uint64_t{1} << v;
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  // Lowest set bit; only meaningful on a nonempty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  // Iterates the set bit indices in ascending order.
  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator!=(iterator a, iterator b) { return a.rest_ != b.rest_; }
    friend constexpr bool operator==(iterator a, iterator b) { return a.rest_ == b.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  // Renders "{0,2,5}"; "{}" when empty.
  std::string to_braces() const {
    std::string out = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) out += ',';
      out += std::to_string(v);
      sep = true;
    }
    out += '}';
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Family order: ascending popcount, then ascending bit word.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits() < b.bits();
}

}  // namespace domcube
