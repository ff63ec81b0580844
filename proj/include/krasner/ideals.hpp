#pragma once

#include <span>
#include <string>
#include <vector>

#include "krasner/hyperring.hpp"

namespace krasner {

/// Outcome of a closure check on a subset, with the first offending tuple.
struct SubsetCheck {
  bool holds = true;
  std::string reason;
  std::vector<ElementId> witness;

  explicit operator bool() const { return holds; }
};

/// Contains zero, closed under negation and f, absorbs under g.
SubsetCheck isHyperideal(const HyperringTable& a, ElementSet q);

/// Least hyperideal containing seed.
ElementSet generateHyperideal(const HyperringTable& a, ElementSet seed);

/// {g(r, x, 1^(n-2)) : r in A}.
ElementSet principal(const HyperringTable& a, ElementId x);

/// All hyperideals, ordered by canonicalLess.
std::vector<ElementSet> enumerateHyperideals(const HyperringTable& a);

/// (Q:x) = {a : g(a, x, 1^(n-2)) in Q}. Q must be a hyperideal.
ElementSet colon(const HyperringTable& a, ElementSet q, ElementId x);

/// Throws PreconditionError on an empty list.
ElementSet intersect(const HyperringTable& a, std::span<const ElementSet> qs);

/// g(Q_1, ..., Q_n) taken setwise.
ElementSet setProduct(const HyperringTable& a, std::span<const ElementSet> qs);
/// The hyperideal generated by setProduct.
ElementSet productIdeal(const HyperringTable& a, std::span<const ElementSet> qs);

/// Nonempty and closed under g. Zero is allowed here.
SubsetCheck isMultiplicative(const HyperringTable& a, ElementSet s);
/// isMultiplicative and zero-free.
SubsetCheck isMulSet(const HyperringTable& a, ElementSet s);
/// Least g-closed superset of seed. Throws PreconditionError if the seed is
/// empty or the closure reaches zero.
ElementSet multiplicativeClosure(const HyperringTable& a, ElementSet seed);
/// Zero-free g-closed subsets with at most maxSize members, canonical order.
std::vector<ElementSet> enumerateMulSets(const HyperringTable& a,
                                         std::size_t maxSize);

}  // namespace krasner
