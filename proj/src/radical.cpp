#include "krasner/radical.hpp"

#include <algorithm>

#include "krasner/ideals.hpp"

namespace krasner {

namespace {

void requireHyperideal(const HyperringTable& a, ElementSet q) {
  if (const auto check = isHyperideal(a, q); !check) {
    throw PreconditionError("not a hyperideal: " + check.reason);
  }
}

void fillExponents(const HyperringTable& a, ElementSet q, RadicalResult& r) {
  for (ElementId x : r.members) {
    ElementId p = x;
    for (unsigned k = 1; k <= a.size(); ++k) {
      if (q.contains(p)) {
        r.exponent[x] = k;
        break;
      }
      p = a.mul(p, x);
    }
  }
}

}  // namespace

std::optional<std::vector<ElementId>> primeCounterexample(
    const HyperringTable& a, ElementSet q) {
  std::optional<std::vector<ElementId>> found;
  forEachMultiset(a.size(), a.n(), [&](std::span<const ElementId> t) {
    if (!q.contains(a.g(t))) return true;
    for (ElementId x : t) {
      if (q.contains(x)) return true;
    }
    found.emplace(t.begin(), t.end());
    return false;
  });
  return found;
}

std::vector<ElementSet> enumeratePrimes(const HyperringTable& a) {
  return enumeratePrimes(a, enumerateHyperideals(a));
}

std::vector<ElementSet> enumeratePrimes(const HyperringTable& a,
                                        const std::vector<ElementSet>& ideals) {
  std::vector<ElementSet> out;
  for (ElementSet q : ideals) {
    if (q != a.carrier() && !primeCounterexample(a, q)) out.push_back(q);
  }
  return out;
}

RadicalResult radicalByPrimes(const HyperringTable& a, ElementSet q) {
  return radicalByPrimes(a, q, enumeratePrimes(a));
}

RadicalResult radicalByPrimes(const HyperringTable& a, ElementSet q,
                              const std::vector<ElementSet>& primes) {
  requireHyperideal(a, q);
  RadicalResult r;
  r.members = a.carrier();
  for (ElementSet p : primes) {
    if (q.isSubsetOf(p)) r.members &= p;
  }
  fillExponents(a, q, r);
  return r;
}

RadicalResult radicalByPowers(const HyperringTable& a, ElementSet q) {
  requireHyperideal(a, q);
  RadicalResult r;
  for (ElementId x = 0; x < a.size(); ++x) {
    ElementId p = x;
    for (unsigned k = 1; k <= a.size(); ++k) {
      if (q.contains(p)) {
        r.members.insert(x);
        r.exponent[x] = k;
        break;
      }
      p = a.mul(p, x);
    }
  }
  return r;
}

ElementSet radicalByRestrictedPowers(const HyperringTable& a, ElementSet q) {
  requireHyperideal(a, q);
  const auto n = static_cast<std::size_t>(a.n());
  ElementSet out;
  std::vector<ElementId> buf;
  for (ElementId x = 0; x < a.size(); ++x) {
    bool hit = false;
    for (std::size_t u = 1; u <= n && !hit; ++u) {
      buf.assign(n, a.one());
      std::fill(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(u), x);
      hit = q.contains(a.g(buf));
    }
    for (int l = 1; !hit && static_cast<std::size_t>(l) <= a.size(); ++l) {
      buf.assign(static_cast<std::size_t>(l) * (n - 1) + 1, x);
      hit = q.contains(evalGIterated(a, l, buf));
    }
    if (hit) out.insert(x);
  }
  return out;
}

}  // namespace krasner
