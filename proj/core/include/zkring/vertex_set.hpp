#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zkring {

inline constexpr int kMaxVertices = 63;

// A subset of [m] = {1, ..., m} packed into one machine word. Vertex i
// (1-indexed, as in all external I/O) lives at bit i - 1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vertices) {
    std::uint64_t bits = 0;
    for (int v : vertices) bits |= std::uint64_t{1} << (v - 1);
    return VertexSet(bits);
  }
  static VertexSet of(const std::vector<int>& vertices) {
    std::uint64_t bits = 0;
    for (int v : vertices) bits |= std::uint64_t{1} << (v - 1);
    return VertexSet(bits);
  }
  // The full vertex set [m].
  static constexpr VertexSet range(int m) {
    return VertexSet(m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m)));
  }
  static constexpr VertexSet singleton(int v) {
    return VertexSet(std::uint64_t{1} << (v - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(VertexSet other) const {
    return (bits_ & other.bits_) == 0;
  }
  // Smallest / largest vertex; 0 for the empty set.
  constexpr int min_vertex() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }
  constexpr int max_vertex() const {
    return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Orders by (cardinality, bitmask); the canonical order for multidegrees
// and missing faces.
struct BySizeThenBits {
  bool operator()(VertexSet a, VertexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

// Packs the bits of `bits` selected by `mask` into the low positions
// (order preserving). Used to re-index subsets of a full subcomplex.
constexpr std::uint64_t compress_bits(std::uint64_t bits, std::uint64_t mask) {
  std::uint64_t out = 0;
  int pos = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++pos) {
    if (bits & (m & -m)) out |= std::uint64_t{1} << pos;
  }
  return out;
}

// Inverse of compress_bits: spreads low bits onto the positions of `mask`.
constexpr std::uint64_t expand_bits(std::uint64_t bits, std::uint64_t mask) {
  std::uint64_t out = 0;
  int pos = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++pos) {
    if ((bits >> pos) & 1U) out |= (m & -m);
  }
  return out;
}

}  // namespace zkring
