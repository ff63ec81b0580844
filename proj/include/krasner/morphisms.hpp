#pragma once

#include <string>
#include <vector>

#include "krasner/hyperring.hpp"

namespace krasner {

struct Homomorphism {
  HyperringTable source;
  HyperringTable target;
  /// Image of each source element.
  std::vector<ElementId> map;

  bool injective() const;
  ElementSet image(ElementSet x) const;
};

struct HomomorphismCheck {
  bool holds = true;
  std::string condition;
  std::vector<ElementId> witness;
  std::string explanation;

  explicit operator bool() const { return holds; }
};

/// Checks f setwise, g, psi(1) = 1 and psi(0) = 0 exhaustively. Throws
/// StructureError if the map is not total or leaves the target.
HomomorphismCheck checkHomomorphism(const Homomorphism& h);

/// {x : h(x) in Q2}.
ElementSet preimage(const Homomorphism& h, ElementSet q2);

Homomorphism identityMap(const HyperringTable& a);
/// (a,b) -> (b,a) from product(A,B) to product(B,A).
Homomorphism swapMap(const HyperringTable& a, const HyperringTable& b);
/// x -> (x,x) into product(A,A).
Homomorphism diagonalMap(const HyperringTable& a);

/// True if sub contains 0 and 1 and is closed under f and g.
bool isSubhyperring(const HyperringTable& a, ElementSet sub);
/// The induced structure on sub, elements ordered as in a.
HyperringTable restrictTo(const HyperringTable& a, ElementSet sub);
/// restrictTo(a, sub) -> a.
Homomorphism inclusionMap(const HyperringTable& a, ElementSet sub);
/// Every proper subhyperring, canonical order. Powerset scan; |A| <= 16.
std::vector<ElementSet> enumerateSubhyperrings(const HyperringTable& a);

}  // namespace krasner
