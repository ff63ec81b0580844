#include "krasner/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace krasner {

namespace {

SubsetCheck failure(std::string reason, std::vector<ElementId> witness) {
  return SubsetCheck{false, std::move(reason), std::move(witness)};
}

void requireSubset(const HyperringTable& a, ElementSet s, const char* what) {
  if (!s.isSubsetOf(a.carrier())) {
    throw StructureError(std::string(what) + " contains unknown elements");
  }
}

}  // namespace

SubsetCheck isHyperideal(const HyperringTable& a, ElementSet q) {
  requireSubset(a, q, "subset");
  if (!q.contains(a.zero())) {
    return failure("zero " + a.label(a.zero()) + " is missing", {});
  }
  for (ElementId x : q) {
    if (!q.contains(a.negation(x))) {
      return failure(
                     "-" + a.label(x) + " = " + a.label(a.negation(x)) +
                         " is missing",
                     {x});
    }
  }
  SubsetCheck result;
  forEachMultisetOf(q, a.m(), [&](std::span<const ElementId> t) {
    const ElementSet out = a.f(t) - q;
    if (!out.empty()) {
      result = failure(
                       "f" + formatTuple(a, t) + " contains " +
                           a.label(out.first()) + " outside the subset",
                       std::vector<ElementId>(t.begin(), t.end()));
      return false;
    }
    return true;
  });
  if (!result) return result;
  std::vector<ElementId> buf(static_cast<std::size_t>(a.n()));
  for (ElementId x : q) {
    buf[0] = x;
    forEachMultiset(a.size(), a.n() - 1, [&](std::span<const ElementId> t) {
      std::copy(t.begin(), t.end(), buf.begin() + 1);
      const ElementId y = a.g(buf);
      if (!q.contains(y)) {
        result = failure(
                         "g" + formatTuple(a, buf) + " = " + a.label(y) +
                             " is outside the subset",
                         buf);
        return false;
      }
      return true;
    });
    if (!result) return result;
  }
  return result;
}

ElementSet generateHyperideal(const HyperringTable& a, ElementSet seed) {
  requireSubset(a, seed, "seed");
  ElementSet q = seed;
  q.insert(a.zero());
  std::vector<ElementId> buf(static_cast<std::size_t>(a.n()));
  while (true) {
    ElementSet next = q;
    for (ElementId x : q) {
      next.insert(a.negation(x));
      buf[0] = x;
      forEachMultiset(a.size(), a.n() - 1, [&](std::span<const ElementId> t) {
        std::copy(t.begin(), t.end(), buf.begin() + 1);
        next.insert(a.g(buf));
        return true;
      });
    }
    forEachMultisetOf(q, a.m(), [&](std::span<const ElementId> t) {
      next |= a.f(t);
      return true;
    });
    if (next == q) return q;
    q = next;
  }
}

ElementSet principal(const HyperringTable& a, ElementId x) {
  if (x >= a.size()) throw StructureError("unknown element");
  ElementSet out;
  for (ElementId r = 0; r < a.size(); ++r) out.insert(a.mul(r, x));
  return out;
}

std::vector<ElementSet> enumerateHyperideals(const HyperringTable& a) {
  std::set<std::uint64_t> seen;
  std::vector<ElementSet> out;
  std::deque<ElementSet> queue;
  const ElementSet bottom = generateHyperideal(a, {});
  seen.insert(bottom.bits());
  queue.push_back(bottom);
  while (!queue.empty()) {
    const ElementSet q = queue.front();
    queue.pop_front();
    out.push_back(q);
    for (ElementId x : a.carrier() - q) {
      ElementSet seed = q;
      seed.insert(x);
      const ElementSet next = generateHyperideal(a, seed);
      if (seen.insert(next.bits()).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

ElementSet colon(const HyperringTable& a, ElementSet q, ElementId x) {
  if (x >= a.size()) throw StructureError("unknown element");
  if (const auto check = isHyperideal(a, q); !check) {
    throw PreconditionError("colon needs a hyperideal: " + check.reason);
  }
  ElementSet out;
  for (ElementId r = 0; r < a.size(); ++r) {
    if (q.contains(a.mul(r, x))) out.insert(r);
  }
  return out;
}

ElementSet intersect(const HyperringTable& a, std::span<const ElementSet> qs) {
  if (qs.empty()) throw PreconditionError("intersection of an empty list");
  ElementSet out = a.carrier();
  for (ElementSet q : qs) {
    requireSubset(a, q, "hyperideal");
    out &= q;
  }
  return out;
}

ElementSet setProduct(const HyperringTable& a, std::span<const ElementSet> qs) {
  return evalGOnSets(a, qs);
}

ElementSet productIdeal(const HyperringTable& a,
                        std::span<const ElementSet> qs) {
  return generateHyperideal(a, setProduct(a, qs));
}

SubsetCheck isMultiplicative(const HyperringTable& a, ElementSet s) {
  requireSubset(a, s, "subset");
  if (s.empty()) return failure("multiplicative set is empty", {});
  SubsetCheck result;
  forEachMultisetOf(s, a.n(), [&](std::span<const ElementId> t) {
    const ElementId y = a.g(t);
    if (!s.contains(y)) {
      result = failure(
                       "g" + formatTuple(a, t) + " = " + a.label(y) +
                           " is outside the set",
                       std::vector<ElementId>(t.begin(), t.end()));
      return false;
    }
    return true;
  });
  return result;
}

SubsetCheck isMulSet(const HyperringTable& a, ElementSet s) {
  auto check = isMultiplicative(a, s);
  if (check && s.contains(a.zero())) {
    return failure("multiplicative set contains zero", {a.zero()});
  }
  return check;
}

ElementSet multiplicativeClosure(const HyperringTable& a, ElementSet seed) {
  requireSubset(a, seed, "seed");
  if (seed.empty()) throw PreconditionError("multiplicative closure of {}");
  ElementSet s = seed;
  while (true) {
    ElementSet next = s;
    forEachMultisetOf(s, a.n(), [&](std::span<const ElementId> t) {
      next.insert(a.g(t));
      return true;
    });
    if (next.contains(a.zero())) {
      throw PreconditionError("degenerate multiplicative set: closure of " +
                              formatSet(a, seed) + " contains zero");
    }
    if (next == s) return s;
    s = next;
  }
}

std::vector<ElementSet> enumerateMulSets(const HyperringTable& a,
                                         std::size_t maxSize) {
  std::vector<ElementId> pool;
  for (ElementId x : a.carrier()) {
    if (x != a.zero()) pool.push_back(x);
  }
  std::vector<ElementSet> out;
  std::vector<ElementId> pick;
  // Subsets of pool of each size, in lexicographic order.
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      const ElementSet s = ElementSet::of(pick);
      if (isMultiplicative(a, s)) out.push_back(s);
    }
    if (pick.size() == maxSize) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

}  // namespace krasner
