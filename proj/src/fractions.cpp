#include "krasner/fractions.hpp"

#include <algorithm>

#include "krasner/ideals.hpp"

namespace krasner {

namespace {

/// Square boolean relation over pair indices.
class Relation {
 public:
  explicit Relation(std::size_t size)
      : size_(size), words_((size + 63) / 64), bits_(size * words_, 0) {}

  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  /// Some k with i~k in row i but not in row j, or size() if none.
  std::size_t firstMissing(std::size_t i, std::size_t j) const {
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t diff = bits_[i * words_ + w] & ~bits_[j * words_ + w];
      if (diff) return w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    }
    return size_;
  }
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

std::string pairLabel(const HyperringTable& a, ElementId x, ElementId s) {
  return a.label(x) + "/" + a.label(s);
}

}  // namespace

ElementId FractionStructure::fraction(ElementId a, ElementId s) const {
  const auto it = std::lower_bound(pairs.begin(), pairs.end(),
                                   std::make_pair(a, s));
  if (it == pairs.end() || *it != std::make_pair(a, s)) {
    throw PreconditionError("denominator outside the multiplicative set");
  }
  return classOf[static_cast<std::size_t>(it - pairs.begin())];
}

FractionStructure localize(const HyperringTable& a, ElementSet s) {
  if (const auto check = isMulSet(a, s); !check) {
    throw PreconditionError("localize needs a multiplicative set: " +
                            check.reason);
  }
  const int m = a.m();
  const int n = a.n();
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId t : s) pairs.emplace_back(x, t);
  }
  const std::size_t count = pairs.size();

  std::vector<ElementId> fbuf(static_cast<std::size_t>(m), a.zero());
  auto related = [&](std::size_t p, std::size_t q) {
    const auto [x, t1] = pairs[p];
    const auto [y, t2] = pairs[q];
    fbuf[0] = a.mul(x, t2);
    fbuf[1] = a.negation(a.mul(y, t1));
    const ElementSet diff = a.f(fbuf);
    for (ElementId u : s) {
      for (ElementId d : diff) {
        if (a.mul(u, d) == a.zero()) return true;
      }
    }
    return false;
  };
  Relation rel(count);
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = 0; q < count; ++q) {
      if (related(p, q)) rel.set(p, q);
    }
  }
  for (std::size_t p = 0; p < count; ++p) {
    if (!rel.get(p, p)) {
      throw StructureError("fraction relation is not reflexive at " +
                           pairLabel(a, pairs[p].first, pairs[p].second));
    }
    for (std::size_t q = 0; q < count; ++q) {
      if (!rel.get(p, q)) continue;
      if (!rel.get(q, p)) {
        throw StructureError(
            "fraction relation is not symmetric: " +
            pairLabel(a, pairs[p].first, pairs[p].second) + " ~ " +
            pairLabel(a, pairs[q].first, pairs[q].second));
      }
      if (const std::size_t r = rel.firstMissing(q, p); r < count) {
        throw StructureError(
            "fraction relation is not transitive: " +
            pairLabel(a, pairs[p].first, pairs[p].second) + " ~ " +
            pairLabel(a, pairs[q].first, pairs[q].second) + " ~ " +
            pairLabel(a, pairs[r].first, pairs[r].second));
      }
    }
  }

  std::vector<ElementId> classOf(count, 0);
  std::vector<std::size_t> leader;
  {
    std::vector<bool> done(count, false);
    for (std::size_t p = 0; p < count; ++p) {
      if (done[p]) continue;
      const auto id = static_cast<ElementId>(leader.size());
      leader.push_back(p);
      for (std::size_t q = p; q < count; ++q) {
        if (rel.get(p, q)) {
          classOf[q] = id;
          done[q] = true;
        }
      }
    }
  }
  if (leader.size() > kMaxCarrier) {
    throw StructureError("localization has too many classes");
  }
  std::vector<std::vector<std::size_t>> members(leader.size());
  for (std::size_t p = 0; p < count; ++p) members[classOf[p]].push_back(p);

  auto indexOf = [&](ElementId x, ElementId t) {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(),
                                     std::make_pair(x, t));
    return static_cast<std::size_t>(it - pairs.begin());
  };
  auto classOfPair = [&](ElementId x, ElementId t) {
    return classOf[indexOf(x, t)];
  };

  // Operations on representative pairs.
  const int l = (m - 1 + n - 2) / (n - 1);  // least l with l(n-1)+1 >= m
  const std::size_t padded = static_cast<std::size_t>(l) * (n - 1) + 1;
  std::vector<ElementId> dens(padded);
  std::vector<ElementId> nums(static_cast<std::size_t>(m));
  std::vector<ElementId> tmp(padded);
  auto fOnPairs = [&](std::span<const std::size_t> reps) {
    for (std::size_t i = 0; i < padded; ++i) {
      dens[i] = pairs[reps[i < reps.size() ? i : 0]].second;
    }
    const ElementId d = evalGIterated(a, l, dens);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      tmp = dens;
      tmp[i] = pairs[reps[i]].first;
      nums[i] = evalGIterated(a, l, tmp);
    }
    ElementSet out;
    for (ElementId z : a.f(nums)) out.insert(classOfPair(z, d));
    return out;
  };
  std::vector<ElementId> gnum(static_cast<std::size_t>(n));
  std::vector<ElementId> gden(static_cast<std::size_t>(n));
  auto gOnPairs = [&](std::span<const std::size_t> reps) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      gnum[i] = pairs[reps[i]].first;
      gden[i] = pairs[reps[i]].second;
    }
    return classOfPair(a.g(gnum), a.g(gden));
  };

  // Every representative choice must agree with the leaders' result.
  auto checkWellDefined = [&](int arity, auto&& op, const char* name) {
    std::vector<std::size_t> reps(static_cast<std::size_t>(arity));
    forEachMultiset(leader.size(), arity, [&](std::span<const ElementId> cls) {
      for (std::size_t i = 0; i < cls.size(); ++i) reps[i] = leader[cls[i]];
      const auto expect = op(std::span<const std::size_t>(reps));
      std::vector<std::size_t> pos(cls.size(), 0);
      while (true) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
          reps[i] = members[cls[i]][pos[i]];
        }
        if (op(std::span<const std::size_t>(reps)) != expect) {
          std::string where;
          for (std::size_t i = 0; i < reps.size(); ++i) {
            if (i) where += ", ";
            where += pairLabel(a, pairs[reps[i]].first, pairs[reps[i]].second);
          }
          throw StructureError(std::string(name) +
                               " on fractions depends on representatives at (" +
                               where + ")");
        }
        std::size_t k = cls.size();
        while (k > 0 && pos[k - 1] + 1 == members[cls[k - 1]].size()) --k;
        if (k == 0) break;
        ++pos[k - 1];
        for (std::size_t i = k; i < cls.size(); ++i) pos[i] = 0;
      }
      return true;
    });
  };
  checkWellDefined(m, fOnPairs, "F");
  checkWellDefined(n, gOnPairs, "G");

  const ElementId s0 = s.first();
  std::vector<std::string> labels;
  std::vector<ElementId> negation;
  for (std::size_t c = 0; c < leader.size(); ++c) {
    const auto [x, t] = pairs[leader[c]];
    labels.push_back(pairLabel(a, x, t));
    negation.push_back(classOfPair(a.negation(x), t));
  }
  std::vector<std::size_t> reps;
  HyperringTable localized = HyperringTable::fromFunctions(
      m, n, std::move(labels), classOfPair(a.zero(), s0),
      classOfPair(s0, s0), std::move(negation),
      [&](std::span<const ElementId> cls) {
        reps.resize(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i) reps[i] = leader[cls[i]];
        return fOnPairs(reps);
      },
      [&](std::span<const ElementId> cls) {
        reps.resize(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i) reps[i] = leader[cls[i]];
        return gOnPairs(reps);
      });

  std::vector<ElementId> canonical;
  for (ElementId x = 0; x < a.size(); ++x) {
    canonical.push_back(s.contains(a.one()) ? classOfPair(x, a.one())
                                            : classOfPair(a.mul(x, s0), s0));
  }
  ElementSet kernel;
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId t : s) {
      if (a.mul(x, t) == a.zero()) {
        kernel.insert(x);
        break;
      }
    }
  }
  return FractionStructure{a,
                           s,
                           std::move(pairs),
                           std::move(classOf),
                           std::move(localized),
                           std::move(canonical),
                           kernel};
}

ElementSet extend(const FractionStructure& fs, ElementSet q) {
  if (!q.isSubsetOf(fs.base.carrier())) {
    throw StructureError("hyperideal contains unknown elements");
  }
  ElementSet seed;
  for (ElementId x : q) {
    for (ElementId t : fs.denominators) seed.insert(fs.fraction(x, t));
  }
  return generateHyperideal(fs.localized, seed);
}

ElementSet contract(const FractionStructure& fs, ElementSet j) {
  if (!fs.denominators.contains(fs.base.one())) {
    throw PreconditionError("contract needs 1 in S");
  }
  ElementSet out;
  for (ElementId x = 0; x < fs.base.size(); ++x) {
    if (j.contains(fs.canonicalMap[x])) out.insert(x);
  }
  return out;
}

ElementSet imageMulSet(const FractionStructure& fs, ElementSet sub) {
  ElementSet out;
  for (ElementId x : sub) {
    for (ElementId t : fs.denominators) out.insert(fs.fraction(x, t));
  }
  return out;
}

ElementSet saturate(const FractionStructure& fs) {
  if (!fs.denominators.contains(fs.base.one())) {
    throw PreconditionError("saturate needs 1 in S");
  }
  const HyperringTable& loc = fs.localized;
  ElementSet out;
  for (ElementId x = 0; x < fs.base.size(); ++x) {
    const ElementId image = fs.canonicalMap[x];
    for (ElementId c = 0; c < loc.size(); ++c) {
      if (loc.mul(image, c) == loc.one()) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

ElementSet saturate(const HyperringTable& a, ElementSet s) {
  if (!s.contains(a.one())) throw PreconditionError("saturate needs 1 in S");
  return saturate(localize(a, s));
}

}  // namespace krasner
