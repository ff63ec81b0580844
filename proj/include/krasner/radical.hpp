#pragma once

#include <map>
#include <optional>
#include <vector>

#include "krasner/hyperring.hpp"

namespace krasner {

struct RadicalResult {
  ElementSet members;
  /// Least k with power(x, k) in Q, for every member reached by powers.
  std::map<ElementId, unsigned> exponent;
};

/// First n-multiset (ascending) whose product lies in Q while no factor
/// does; nullopt if Q passes the elementwise prime criterion.
std::optional<std::vector<ElementId>> primeCounterexample(
    const HyperringTable& a, ElementSet q);

/// Proper hyperideals passing the elementwise prime criterion.
std::vector<ElementSet> enumeratePrimes(const HyperringTable& a);
std::vector<ElementSet> enumeratePrimes(const HyperringTable& a,
                                        const std::vector<ElementSet>& ideals);

/// Intersection of the primes containing Q, or A if there are none.
RadicalResult radicalByPrimes(const HyperringTable& a, ElementSet q);
RadicalResult radicalByPrimes(const HyperringTable& a, ElementSet q,
                              const std::vector<ElementSet>& primes);

/// {x : power(x, k) in Q for some k <= |A|}.
RadicalResult radicalByPowers(const HyperringTable& a, ElementSet q);

/// Powers restricted to g(x^(u), 1^(n-u)) with u <= n and g_(l)(x^(l(n-1)+1)).
ElementSet radicalByRestrictedPowers(const HyperringTable& a, ElementSet q);

}  // namespace krasner
