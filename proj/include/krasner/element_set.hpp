#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace krasner {

/// Dense index of a carrier element, 0..size-1.
using ElementId = std::uint32_t;

/// Hard ceiling on carrier cardinality; ElementSet is a single machine word.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a carrier of at most kMaxCarrier elements.
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
      return static_cast<ElementId>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<ElementId> ids) {
    for (ElementId id : ids) insert(id);
  }

  static constexpr ElementSet single(ElementId id) {
    return ElementSet(std::uint64_t{1} << id);
  }
  static constexpr ElementSet all(std::size_t size) {
    return ElementSet(size >= 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << size) - 1);
  }
  template <typename Range>
  static ElementSet of(const Range& ids) {
    ElementSet out;
    for (auto id : ids) out.insert(static_cast<ElementId>(id));
    return out;
  }

  constexpr bool contains(ElementId id) const {
    return id < 64 && ((bits_ >> id) & 1U) != 0;
  }
  constexpr void insert(ElementId id) { bits_ |= std::uint64_t{1} << id; }
  constexpr void erase(ElementId id) { bits_ &= ~(std::uint64_t{1} << id); }

  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Least member; undefined on the empty set.
  constexpr ElementId first() const {
    return static_cast<ElementId>(std::countr_zero(bits_));
  }

  constexpr bool isSubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<ElementId> toVector() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for (ElementId id : *this) out.push_back(id);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Deterministic listing order: by cardinality, then lexicographically by
/// the ascending member list.
inline bool canonicalLess(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

}  // namespace krasner
