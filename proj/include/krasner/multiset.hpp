#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "krasner/element_set.hpp"

namespace krasner {

/// Largest arity accepted for either operation.
inline constexpr int kMaxArity = 8;

namespace detail {

struct BinomialTable {
  static constexpr std::size_t kRows = kMaxCarrier + kMaxArity + 2;
  std::array<std::array<std::uint64_t, kMaxArity + 2>, kRows> c{};
  constexpr BinomialTable() {
    for (std::size_t r = 0; r < kRows; ++r) {
      c[r][0] = 1;
      for (std::size_t k = 1; k < kMaxArity + 2; ++k) {
        c[r][k] = r == 0 ? 0 : c[r - 1][k - 1] + c[r - 1][k];
      }
    }
  }
};

inline constexpr BinomialTable kBinomial{};

}  // namespace detail

/// Number of multisets of cardinality k over a carrier of the given size.
constexpr std::uint64_t multisetCount(std::size_t size, int k) {
  return detail::kBinomial.c[size + static_cast<std::size_t>(k) - 1]
                            [static_cast<std::size_t>(k)];
}

/// Combinatorial-number-system rank of a nondecreasing tuple.
inline std::uint64_t multisetRank(std::span<const ElementId> sorted) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    rank += detail::kBinomial.c[sorted[i] + i][i + 1];
  }
  return rank;
}

/// Calls fn on every nondecreasing k-tuple over `pool` (ascending ids), in
/// lexicographic order. fn returns false to stop; the return value reports
/// whether the enumeration ran to completion.
template <typename Fn>
bool forEachMultisetOf(std::span<const ElementId> pool, int k, Fn&& fn) {
  if (k <= 0) {
    return fn(std::span<const ElementId>{});
  }
  if (pool.empty()) return true;
  std::array<std::size_t, kMaxArity * 2> idx{};
  std::array<ElementId, kMaxArity * 2> tuple{};
  const auto kk = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < kk; ++i) tuple[i] = pool[0];
  while (true) {
    if (!fn(std::span<const ElementId>(tuple.data(), kk))) return false;
    std::size_t pos = kk;
    while (pos > 0 && idx[pos - 1] + 1 == pool.size()) --pos;
    if (pos == 0) return true;
    const std::size_t next = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < kk; ++i) {
      idx[i] = next;
      tuple[i] = pool[next];
    }
  }
}

template <typename Fn>
bool forEachMultisetOf(ElementSet pool, int k, Fn&& fn) {
  const std::vector<ElementId> ids = pool.toVector();
  return forEachMultisetOf(std::span<const ElementId>(ids), k,
                           std::forward<Fn>(fn));
}

template <typename Fn>
bool forEachMultiset(std::size_t size, int k, Fn&& fn) {
  return forEachMultisetOf(ElementSet::all(size), k, std::forward<Fn>(fn));
}

/// Every k-tuple (ordered, with repetition) over [0, size).
template <typename Fn>
bool forEachTuple(std::size_t size, int k, Fn&& fn) {
  std::vector<ElementId> tuple(static_cast<std::size_t>(k), 0);
  if (size == 0) return true;
  while (true) {
    if (!fn(std::span<const ElementId>(tuple))) return false;
    std::size_t pos = tuple.size();
    while (pos > 0 && tuple[pos - 1] + 1 == size) --pos;
    if (pos == 0) return true;
    ++tuple[pos - 1];
    for (std::size_t i = pos; i < tuple.size(); ++i) tuple[i] = 0;
  }
}

}  // namespace krasner
