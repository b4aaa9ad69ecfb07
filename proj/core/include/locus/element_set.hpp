#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace locus {

/// Frames are capped at 64 elements so an element set fits in one machine word.
inline constexpr std::size_t kMaxElements = 64;

/// Operations that enumerate the full subset space refuse frames above this size.
inline constexpr std::size_t kMaxEnumerableElements = 16;

/// Index of an element inside its owning frame.
struct ElementId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// A set of element indices of one frame, stored as a bitmask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr ElementId operator*() const {
      return ElementId{static_cast<std::uint32_t>(std::countr_zero(rest_))};
    }
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
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(ElementId e) { return ElementSet{std::uint64_t{1} << e.index}; }

  /// The set {0, ..., n-1}.
  static constexpr ElementSet first_n(std::size_t n) {
    return ElementSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(ElementId e) const { return (bits_ >> e.index) & 1U; }
  constexpr void insert(ElementId e) { bits_ |= std::uint64_t{1} << e.index; }
  constexpr void erase(ElementId e) { bits_ &= ~(std::uint64_t{1} << e.index); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet{a.bits_ | b.bits_}; }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet{a.bits_ & b.bits_}; }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet{a.bits_ & ~b.bits_}; }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace locus
