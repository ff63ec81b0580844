#pragma once

#include <utility>
#include <vector>

#include "krasner/hyperring.hpp"

namespace krasner {

/// S^{-1}A on a finite carrier.
///
/// (a,s) ~ (b,t) iff 0 in g(u, f(g(a,t,1..), -g(b,s,1..), 0..), 1..) for some
/// u in S. G multiplies numerators and denominators. F brings the arguments
/// to the common denominator g_(l)(t_1, ..., t_m, t_1, ...) and applies f to
/// the numerators.
struct FractionStructure {
  HyperringTable base;
  ElementSet denominators;
  /// Every pair (a, s), ordered by a then s.
  std::vector<std::pair<ElementId, ElementId>> pairs;
  /// Class of each entry of pairs.
  std::vector<ElementId> classOf;
  HyperringTable localized;
  /// a -> a/1 when 1 in S, otherwise a -> g(a,s0,1..)/s0 for the least s0.
  std::vector<ElementId> canonicalMap;
  /// {x : g(x, t, 1^(n-2)) = 0 for some t in S}.
  ElementSet zeroKernel;

  /// Class of (a, s); s must lie in S.
  ElementId fraction(ElementId a, ElementId s) const;
};

/// Throws PreconditionError if S is not a zero-free multiplicative set, and
/// StructureError naming the witnesses if the relation is not an equivalence
/// or F, G depend on representatives.
FractionStructure localize(const HyperringTable& a, ElementSet s);

/// Hyperideal of the localized structure generated by {q/t : q in Q, t in S}.
ElementSet extend(const FractionStructure& fs, ElementSet q);
/// Preimage of J under the canonical map. Requires 1 in S.
ElementSet contract(const FractionStructure& fs, ElementSet j);
/// {s/t : s in sub, t in S}, a subset of the localized carrier.
ElementSet imageMulSet(const FractionStructure& fs, ElementSet sub);

/// {x : x/1 is invertible in S^{-1}A}. Requires 1 in S.
ElementSet saturate(const HyperringTable& a, ElementSet s);
ElementSet saturate(const FractionStructure& fs);

}  // namespace krasner
