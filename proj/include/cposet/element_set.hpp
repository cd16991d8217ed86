#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>

namespace cposet {

/// Maximum universe size supported by the bitset representation.
inline constexpr std::size_t kMaxElements = 64;

/// Dense index of an element inside one poset.
struct ElementId {
  std::uint32_t index = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t i) : index(i) {}
  constexpr explicit ElementId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}
  constexpr explicit ElementId(int i) : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// Finite subset of a poset universe, stored as a 64-bit mask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = ElementId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr ElementId operator*() const { return ElementId(static_cast<std::uint32_t>(std::countr_zero(rest_))); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) { return ElementSet(bits); }
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet single(ElementId x) { return ElementSet(std::uint64_t{1} << x.index); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(ElementId x) const { return (bits_ >> x.index) & 1U; }
  constexpr void insert(ElementId x) { bits_ |= std::uint64_t{1} << x.index; }
  constexpr void erase(ElementId x) { bits_ &= ~(std::uint64_t{1} << x.index); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const { return subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  /// Lowest-indexed member; undefined on the empty set.
  constexpr ElementId first() const { return ElementId(static_cast<std::uint32_t>(std::countr_zero(bits_))); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return a |= b; }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return a &= b; }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return a -= b; }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

/// Enumeration order used everywhere: by size, then lexicographic on the
/// ascending list of member indices.
constexpr bool enumeration_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

struct EnumerationLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const { return enumeration_less(a, b); }
};

}  // namespace cposet

template <>
struct std::hash<cposet::ElementSet> {
  std::size_t operator()(cposet::ElementSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
