#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>

namespace oldsets {

using Vertex = unsigned;

/// Largest graph order supported by the single-word representation.
inline constexpr unsigned kMaxOrder = 64;

/// Subset of {0, ..., 63} stored as one machine word.
class VertexSet {
public:
  using Word = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}

  /// The set {0, ..., n-1}.
  static constexpr VertexSet prefix(unsigned n) {
    return VertexSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static constexpr VertexSet singleton(Vertex v) { return VertexSet(Word{1} << v); }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// Least element; undefined on the empty set.
  constexpr Vertex front() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr VertexSet& insert(Vertex v) {
    bits_ |= Word{1} << v;
    return *this;
  }
  constexpr VertexSet& erase(Vertex v) {
    bits_ &= ~(Word{1} << v);
    return *this;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator^=(VertexSet o) { bits_ ^= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  /// Orders by bitmask value.
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    Word rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

private:
  Word bits_ = 0;
};

/// "{0,3,5}" style rendering.
std::string to_string(VertexSet s);

}  // namespace oldsets
