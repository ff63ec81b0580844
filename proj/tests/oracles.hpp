#pragma once

// Brute-force reference implementations used by the tests. They work on
// ordered tuples and raw subsets and share no code with the library beyond
// reading f and g entries.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "krasner/hyperring.hpp"

namespace oracle {

using krasner::ElementId;
using krasner::ElementSet;
using krasner::HyperringTable;

/// Calls fn on every ordered k-tuple over {0..size-1}.
inline void tuples(std::size_t size, std::size_t k,
                   const std::function<void(const std::vector<ElementId>&)>& fn) {
  std::vector<ElementId> t(k, 0);
  while (true) {
    fn(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] + 1 == size) t[--i] = 0;
    if (i == 0) return;
    ++t[i - 1];
  }
}

/// Z_m modulo a unit subgroup, computed with plain integers.
struct ModQuotient {
  int m;
  std::vector<int> units;

  int cls(int x) const {
    int best = m;
    for (int u : units) best = std::min(best, ((x % m + m) % m) * u % m);
    return best;
  }
  std::vector<int> reps() const {
    std::set<int> out;
    for (int x = 0; x < m; ++x) out.insert(cls(x));
    return {out.begin(), out.end()};
  }
  std::vector<int> orbit(int x) const {
    std::set<int> out;
    for (int u : units) out.insert(x * u % m);
    return {out.begin(), out.end()};
  }
  std::set<int> add(int a, int b) const {
    std::set<int> out;
    for (int x : orbit(a)) {
      for (int y : orbit(b)) out.insert(cls(x + y));
    }
    return out;
  }
  int mul(const std::vector<int>& xs) const {
    int p = 1;
    for (int x : xs) p = p * x % m;
    return cls(p);
  }
};

/// Subgroups of the unit group of Z_m by brute force over subsets.
inline std::vector<std::vector<int>> unitSubgroups(int m) {
  std::vector<int> units;
  for (int x = 1; x < m; ++x) {
    if (std::gcd(x, m) == 1) units.push_back(x);
  }
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1U << units.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < units.size(); ++i) {
      if ((mask >> i) & 1U) sub.push_back(units[i]);
    }
    if (sub.empty() || sub[0] != 1) continue;
    bool closed = true;
    for (int x : sub) {
      for (int y : sub) {
        closed = closed && std::count(sub.begin(), sub.end(), x * y % m) == 1;
      }
    }
    if (closed) out.push_back(sub);
  }
  return out;
}

/// Definition of a hyperideal checked on every ordered tuple.
inline bool isIdeal(const HyperringTable& a, ElementSet q) {
  if (!q.contains(a.zero())) return false;
  const std::vector<ElementId> members = q.toVector();
  for (ElementId x : members) {
    for (ElementId y = 0; y < a.size(); ++y) {
      std::vector<ElementId> t(static_cast<std::size_t>(a.m()), a.zero());
      t[0] = x;
      t[1] = y;
      if (a.f(t).contains(a.zero()) && !q.contains(y)) return false;
    }
  }
  bool ok = true;
  tuples(members.size(), static_cast<std::size_t>(a.m()),
         [&](const std::vector<ElementId>& idx) {
           std::vector<ElementId> t;
           for (ElementId i : idx) t.push_back(members[i]);
           ok = ok && a.f(t).isSubsetOf(q);
         });
  tuples(a.size(), static_cast<std::size_t>(a.n() - 1),
         [&](const std::vector<ElementId>& rest) {
           for (ElementId x : members) {
             std::vector<ElementId> t = rest;
             t.push_back(x);
             ok = ok && q.contains(a.g(t));
           }
         });
  return ok;
}

/// Every subset passing isIdeal, sorted by size then bits.
inline std::vector<ElementSet> ideals(const HyperringTable& a) {
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
    if (oracle::isIdeal(a, ElementSet(mask))) out.push_back(ElementSet(mask));
  }
  return out;
}

/// Proper ideal whose ordered n-tuple products in q force a factor in q.
inline bool isPrime(const HyperringTable& a, ElementSet q) {
  if (q == a.carrier()) return false;
  bool ok = true;
  tuples(a.size(), static_cast<std::size_t>(a.n()),
         [&](const std::vector<ElementId>& t) {
           if (!q.contains(a.g(t))) return;
           ok = ok && std::any_of(t.begin(), t.end(),
                                  [&](ElementId x) { return q.contains(x); });
         });
  return ok;
}

/// Intersection of the primes containing q; A when there is none.
inline ElementSet radical(const HyperringTable& a, ElementSet q,
                          const std::vector<ElementSet>& all) {
  ElementSet out = a.carrier();
  for (ElementSet p : all) {
    if (q.isSubsetOf(p) && oracle::isPrime(a, p)) out &= p;
  }
  return out;
}

/// x^k as the fold x * x * ... using the binary product g(a,b,1,..).
inline ElementId power(const HyperringTable& a, ElementId x, int k) {
  ElementId acc = a.one();
  for (int i = 0; i < k; ++i) {
    std::vector<ElementId> t(static_cast<std::size_t>(a.n()), a.one());
    t[0] = acc;
    t[1] = x;
    acc = a.g(t);
  }
  return acc;
}

enum class Kind { Prime, Primary };

/// The S-predicates, quantified literally: exists s in S, for all ordered
/// tuples with g in Q (and nonzero when weak), exists i with the clause.
/// S = {one} gives the plain versions.
inline bool sPredicate(const HyperringTable& a, ElementSet q, ElementSet s,
                       ElementSet rad, Kind kind, bool weak) {
  const auto n = static_cast<std::size_t>(a.n());
  for (ElementId w : s) {
    bool works = true;
    tuples(a.size(), n, [&](const std::vector<ElementId>& t) {
      if (!works) return;
      const ElementId prod = a.g(t);
      if (!q.contains(prod) || (weak && prod == a.zero())) return;
      bool some = false;
      for (std::size_t i = 0; i < n && !some; ++i) {
        std::vector<ElementId> sx(n, a.one());
        sx[0] = w;
        sx[1] = t[i];
        if (q.contains(a.g(sx))) some = true;
        if (kind == Kind::Primary) {
          std::vector<ElementId> r = t;
          r[i] = w;
          if (rad.contains(a.g(r))) some = true;
        }
      }
      works = some;
    });
    if (works) return true;
  }
  return false;
}

}  // namespace oracle
