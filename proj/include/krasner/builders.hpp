#pragma once

#include <vector>

#include "krasner/hyperring.hpp"

namespace krasner {

/// Z_modulus modulo a subgroup of its unit group.
struct QuotientSpec {
  int modulus = 2;
  std::vector<int> unitSubgroup{1};
  int n = 2;
};

/// Krasner (2,n)-hyperring of the orbits aG of Z_modulus under the unit
/// subgroup G. Labels are least representatives; the carrier is ordered by
/// them. Throws StructureError if G is not a subgroup of the units.
HyperringTable quotientByUnits(const QuotientSpec& spec);

/// Every subgroup of the unit group of Z_modulus, each as a sorted list.
/// Ordered by size, then lexicographically.
std::vector<std::vector<int>> unitSubgroups(int modulus);

/// The chain e0 < ... < e_{k-1} with f(p,q) = {max(p,q)} for p != q and
/// f(p,p) = {e0..p}. Multiplication is the truncated sum
/// g(e_{i1},...,e_{in}) = e_max(0, i1+...+in - (n-1)(k-1)).
HyperringTable chain(int k, int n);

/// Cartesian product. Element (a,b) has index a * size(A2) + b.
HyperringTable product(const HyperringTable& a1, const HyperringTable& a2);

}  // namespace krasner
