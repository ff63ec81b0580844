#include "krasner/morphisms.hpp"

#include <algorithm>

#include "krasner/builders.hpp"

namespace krasner {

bool Homomorphism::injective() const {
  ElementSet seen;
  for (ElementId y : map) {
    if (seen.contains(y)) return false;
    seen.insert(y);
  }
  return true;
}

ElementSet Homomorphism::image(ElementSet x) const {
  ElementSet out;
  for (ElementId e : x) out.insert(map[e]);
  return out;
}

HomomorphismCheck checkHomomorphism(const Homomorphism& h) {
  const HyperringTable& a = h.source;
  const HyperringTable& b = h.target;
  if (h.map.size() != a.size()) {
    throw StructureError("homomorphism is not total on its source");
  }
  for (ElementId y : h.map) {
    if (y >= b.size()) throw StructureError("homomorphism leaves its target");
  }
  if (a.m() != b.m() || a.n() != b.n()) {
    return {false, "arity", {}, "source and target arities differ"};
  }
  if (h.map[a.one()] != b.one()) {
    return {false, "one", {a.one()},
            "image of one is " + b.label(h.map[a.one()])};
  }
  if (h.map[a.zero()] != b.zero()) {
    return {false, "zero", {a.zero()},
            "image of zero is " + b.label(h.map[a.zero()])};
  }
  HomomorphismCheck result;
  std::vector<ElementId> img;
  forEachMultiset(a.size(), a.m(), [&](std::span<const ElementId> t) {
    img.assign(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) img[i] = h.map[t[i]];
    const ElementSet lhs = h.image(a.f(t));
    const ElementSet rhs = b.f(img);
    if (lhs != rhs) {
      result = {false, "f", std::vector<ElementId>(t.begin(), t.end()),
                "image of f" + formatTuple(a, t) + " is " + formatSet(b, lhs) +
                    " but f" + formatTuple(b, img) + " = " + formatSet(b, rhs)};
      return false;
    }
    return true;
  });
  if (!result) return result;
  forEachMultiset(a.size(), a.n(), [&](std::span<const ElementId> t) {
    img.assign(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) img[i] = h.map[t[i]];
    const ElementId lhs = h.map[a.g(t)];
    const ElementId rhs = b.g(img);
    if (lhs != rhs) {
      result = {false, "g", std::vector<ElementId>(t.begin(), t.end()),
                "image of g" + formatTuple(a, t) + " is " + b.label(lhs) +
                    " but g" + formatTuple(b, img) + " = " + b.label(rhs)};
      return false;
    }
    return true;
  });
  return result;
}

ElementSet preimage(const Homomorphism& h, ElementSet q2) {
  ElementSet out;
  for (ElementId x = 0; x < h.map.size(); ++x) {
    if (q2.contains(h.map[x])) out.insert(x);
  }
  return out;
}

Homomorphism identityMap(const HyperringTable& a) {
  std::vector<ElementId> map(a.size());
  for (ElementId x = 0; x < a.size(); ++x) map[x] = x;
  return {a, a, std::move(map)};
}

Homomorphism swapMap(const HyperringTable& a, const HyperringTable& b) {
  std::vector<ElementId> map;
  const auto sa = static_cast<ElementId>(a.size());
  const auto sb = static_cast<ElementId>(b.size());
  for (ElementId x = 0; x < sa; ++x) {
    for (ElementId y = 0; y < sb; ++y) map.push_back(y * sa + x);
  }
  return {product(a, b), product(b, a), std::move(map)};
}

Homomorphism diagonalMap(const HyperringTable& a) {
  std::vector<ElementId> map;
  const auto s = static_cast<ElementId>(a.size());
  for (ElementId x = 0; x < s; ++x) map.push_back(x * s + x);
  return {a, product(a, a), std::move(map)};
}

bool isSubhyperring(const HyperringTable& a, ElementSet sub) {
  if (!sub.isSubsetOf(a.carrier()) || !sub.contains(a.zero()) ||
      !sub.contains(a.one())) {
    return false;
  }
  for (ElementId x : sub) {
    if (!sub.contains(a.negation(x))) return false;
  }
  bool closed = forEachMultisetOf(sub, a.m(), [&](std::span<const ElementId> t) {
    return a.f(t).isSubsetOf(sub);
  });
  closed = closed &&
           forEachMultisetOf(sub, a.n(), [&](std::span<const ElementId> t) {
             return sub.contains(a.g(t));
           });
  return closed;
}

HyperringTable restrictTo(const HyperringTable& a, ElementSet sub) {
  if (!isSubhyperring(a, sub)) {
    throw StructureError(formatSet(a, sub) + " is not a subhyperring");
  }
  const std::vector<ElementId> ids = sub.toVector();
  std::vector<ElementId> local(a.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    local[ids[i]] = static_cast<ElementId>(i);
  }
  std::vector<std::string> labels;
  std::vector<ElementId> negation;
  for (ElementId x : ids) {
    labels.push_back(a.label(x));
    negation.push_back(local[a.negation(x)]);
  }
  std::vector<ElementId> buf;
  return HyperringTable::fromFunctions(
      a.m(), a.n(), std::move(labels), local[a.zero()], local[a.one()],
      std::move(negation),
      [&](std::span<const ElementId> t) {
        buf.assign(t.size(), 0);
        for (std::size_t i = 0; i < t.size(); ++i) buf[i] = ids[t[i]];
        ElementSet out;
        for (ElementId y : a.f(buf)) out.insert(local[y]);
        return out;
      },
      [&](std::span<const ElementId> t) {
        buf.assign(t.size(), 0);
        for (std::size_t i = 0; i < t.size(); ++i) buf[i] = ids[t[i]];
        return local[a.g(buf)];
      });
}

Homomorphism inclusionMap(const HyperringTable& a, ElementSet sub) {
  return {restrictTo(a, sub), a, sub.toVector()};
}

std::vector<ElementSet> enumerateSubhyperrings(const HyperringTable& a) {
  if (a.size() > 16) {
    throw PreconditionError("subhyperring enumeration is limited to 16 elements");
  }
  ElementSet fixed;
  fixed.insert(a.zero());
  fixed.insert(a.one());
  const std::vector<ElementId> rest = (a.carrier() - fixed).toVector();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size());
       ++mask) {
    ElementSet sub = fixed;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if ((mask >> i) & 1U) sub.insert(rest[i]);
    }
    if (sub != a.carrier() && isSubhyperring(a, sub)) out.push_back(sub);
  }
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

}  // namespace krasner
