#include "krasner/hyperring.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <unordered_set>

namespace krasner {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

std::size_t denseExtent(std::size_t size, int arity) {
  std::size_t total = 1;
  for (int i = 0; i < arity; ++i) {
    if (total > kDenseLimit / size) return 0;
    total *= size;
  }
  return total;
}

std::size_t denseIndex(std::size_t size, std::span<const ElementId> tuple) {
  std::size_t idx = 0;
  for (std::size_t i = tuple.size(); i-- > 0;) idx = idx * size + tuple[i];
  return idx;
}

std::uint64_t sortedRank(std::span<const ElementId> tuple) {
  std::array<ElementId, kMaxArity * 2> buf{};
  std::copy(tuple.begin(), tuple.end(), buf.begin());
  std::sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(tuple.size()));
  return multisetRank(std::span<const ElementId>(buf.data(), tuple.size()));
}

std::string joinIds(std::span<const ElementId> ids) {
  std::string out = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  return out + ")";
}

void checkArity(int arity, const char* which) {
  if (arity < 2 || arity > kMaxArity) {
    throw StructureError(std::string("arity of ") + which + " must be in 2.." +
                         std::to_string(kMaxArity) + ", got " +
                         std::to_string(arity));
  }
}

/// All k-subsets of {0..total-1} as position masks.
std::vector<std::uint32_t> positionSubsets(int total, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1U << total); ++mask) {
    if (std::popcount(mask) == k) out.push_back(mask);
  }
  return out;
}

}  // namespace

HyperringTable HyperringTable::fromFunctions(int m, int n,
                                             std::vector<std::string> labels,
                                             ElementId zero, ElementId one,
                                             std::vector<ElementId> negation,
                                             const HyperaddFn& f,
                                             const MultiplyFn& g) {
  checkArity(m, "hyperaddition");
  checkArity(n, "multiplication");
  const std::size_t size = labels.size();
  if (size == 0) throw StructureError("carrier is empty");
  if (size > kMaxCarrier) {
    throw StructureError("carrier of " + std::to_string(size) +
                         " elements exceeds the limit of " +
                         std::to_string(kMaxCarrier));
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw StructureError("duplicate element label '" + l + "'");
      }
    }
  }
  if (zero >= size || one >= size) {
    throw StructureError("zero or one is outside the carrier");
  }
  if (negation.size() != size) {
    throw StructureError("negation table has the wrong length");
  }
  for (ElementId y : negation) {
    if (y >= size) throw StructureError("negation value outside the carrier");
  }

  auto data = std::make_shared<Data>();
  data->m = m;
  data->n = n;
  data->size = size;
  data->labels = std::move(labels);
  data->zero = zero;
  data->one = one;
  data->negation = std::move(negation);

  const ElementSet carrier = ElementSet::all(size);
  data->fRanked.resize(multisetCount(size, m));
  forEachMultiset(size, m, [&](std::span<const ElementId> t) {
    const ElementSet value = f(t);
    if (value.empty()) {
      throw StructureError("empty hyperoperation value at f" + joinIds(t));
    }
    if (!value.isSubsetOf(carrier)) {
      throw StructureError("f" + joinIds(t) + " leaves the carrier");
    }
    data->fRanked[multisetRank(t)] = value;
    return true;
  });
  data->gRanked.resize(multisetCount(size, n));
  forEachMultiset(size, n, [&](std::span<const ElementId> t) {
    const ElementId value = g(t);
    if (value >= size) {
      throw StructureError("g" + joinIds(t) + " leaves the carrier");
    }
    data->gRanked[multisetRank(t)] = value;
    return true;
  });

  if (const std::size_t extent = denseExtent(size, m); extent != 0) {
    data->fDense.resize(extent);
    forEachTuple(size, m, [&](std::span<const ElementId> t) {
      data->fDense[denseIndex(size, t)] = data->fRanked[sortedRank(t)];
      return true;
    });
  }
  if (const std::size_t extent = denseExtent(size, n); extent != 0) {
    data->gDense.resize(extent);
    forEachTuple(size, n, [&](std::span<const ElementId> t) {
      data->gDense[denseIndex(size, t)] =
          static_cast<std::uint8_t>(data->gRanked[sortedRank(t)]);
      return true;
    });
  }

  HyperringTable table(data);
  std::vector<ElementId> buf;
  data->mul.resize(size * size);
  data->add.resize(size * size);
  for (ElementId a = 0; a < size; ++a) {
    for (ElementId b = 0; b < size; ++b) {
      buf.assign(static_cast<std::size_t>(n), one);
      buf[0] = a;
      buf[1] = b;
      data->mul[a * size + b] = table.g(buf);
      buf.assign(static_cast<std::size_t>(m), zero);
      buf[0] = a;
      buf[1] = b;
      data->add[a * size + b] = table.f(buf);
    }
  }
  return table;
}

std::optional<ElementId> HyperringTable::find(std::string_view label) const {
  for (std::size_t i = 0; i < data_->labels.size(); ++i) {
    if (data_->labels[i] == label) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

ElementSet HyperringTable::f(std::span<const ElementId> tuple) const {
  if (!data_->fDense.empty()) {
    return data_->fDense[denseIndex(data_->size, tuple)];
  }
  return data_->fRanked[sortedRank(tuple)];
}

ElementId HyperringTable::g(std::span<const ElementId> tuple) const {
  if (!data_->gDense.empty()) {
    return data_->gDense[denseIndex(data_->size, tuple)];
  }
  return data_->gRanked[sortedRank(tuple)];
}

RawTables HyperringTable::toRaw() const {
  RawTables raw;
  raw.m = data_->m;
  raw.n = data_->n;
  raw.labels = data_->labels;
  raw.zero = data_->zero;
  raw.one = data_->one;
  raw.negation = data_->negation;
  forEachMultiset(size(), m(), [&](std::span<const ElementId> t) {
    raw.f.emplace_back(std::vector<ElementId>(t.begin(), t.end()),
                       data_->fRanked[multisetRank(t)]);
    return true;
  });
  forEachMultiset(size(), n(), [&](std::span<const ElementId> t) {
    raw.g.emplace_back(std::vector<ElementId>(t.begin(), t.end()),
                       data_->gRanked[multisetRank(t)]);
    return true;
  });
  return raw;
}

bool operator==(const HyperringTable& a, const HyperringTable& b) {
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  return x.m == y.m && x.n == y.n && x.labels == y.labels &&
         x.zero == y.zero && x.one == y.one && x.negation == y.negation &&
         x.fRanked == y.fRanked && x.gRanked == y.gRanked;
}

HyperringTable fromTables(const RawTables& raw) {
  checkArity(raw.m, "hyperaddition");
  checkArity(raw.n, "multiplication");
  const std::size_t size = raw.labels.size();
  if (size == 0) throw StructureError("carrier is empty");
  if (size > kMaxCarrier) {
    throw StructureError("carrier exceeds the limit of " +
                         std::to_string(kMaxCarrier) + " elements");
  }

  auto checkKey = [&](const std::vector<ElementId>& key, int arity,
                      const char* op) {
    if (key.size() != static_cast<std::size_t>(arity)) {
      throw StructureError(std::string(op) + joinIds(key) + " has arity " +
                           std::to_string(key.size()) + ", expected " +
                           std::to_string(arity));
    }
    for (ElementId id : key) {
      if (id >= size) {
        throw StructureError(std::string(op) + joinIds(key) +
                             " refers to an unknown element");
      }
    }
  };

  std::vector<std::optional<ElementSet>> fv(multisetCount(size, raw.m));
  for (const auto& [key, value] : raw.f) {
    checkKey(key, raw.m, "f");
    if (value.empty()) {
      throw StructureError("empty hyperoperation value at f" + joinIds(key));
    }
    if (!value.isSubsetOf(ElementSet::all(size))) {
      throw StructureError("f" + joinIds(key) + " refers to an unknown element");
    }
    auto& slot = fv[sortedRank(key)];
    if (slot && *slot != value) {
      throw StructureError("non-commutative table: entries for f" +
                           joinIds(key) + " disagree");
    }
    slot = value;
  }
  std::vector<std::optional<ElementId>> gv(multisetCount(size, raw.n));
  for (const auto& [key, value] : raw.g) {
    checkKey(key, raw.n, "g");
    if (value >= size) {
      throw StructureError("g" + joinIds(key) + " refers to an unknown element");
    }
    auto& slot = gv[sortedRank(key)];
    if (slot && *slot != value) {
      throw StructureError("non-commutative table: entries for g" +
                           joinIds(key) + " disagree");
    }
    slot = value;
  }
  forEachMultiset(size, raw.m, [&](std::span<const ElementId> t) {
    if (!fv[multisetRank(t)]) {
      throw StructureError("missing entry f" + joinIds(t));
    }
    return true;
  });
  forEachMultiset(size, raw.n, [&](std::span<const ElementId> t) {
    if (!gv[multisetRank(t)]) {
      throw StructureError("missing entry g" + joinIds(t));
    }
    return true;
  });
  if (raw.zero >= size || raw.one >= size) {
    throw StructureError("zero or one is outside the carrier");
  }

  std::vector<ElementId> negation;
  if (raw.negation) {
    negation = *raw.negation;
  } else {
    negation.resize(size);
    std::vector<ElementId> key(static_cast<std::size_t>(raw.m), raw.zero);
    for (ElementId x = 0; x < size; ++x) {
      negation[x] = x;
      for (ElementId y = 0; y < size; ++y) {
        key[0] = x;
        key[1] = y;
        if (fv[sortedRank(key)]->contains(raw.zero)) {
          negation[x] = y;
          break;
        }
      }
    }
  }

  return HyperringTable::fromFunctions(
      raw.m, raw.n, raw.labels, raw.zero, raw.one, std::move(negation),
      [&](std::span<const ElementId> t) { return *fv[multisetRank(t)]; },
      [&](std::span<const ElementId> t) { return *gv[multisetRank(t)]; });
}

namespace {

void checkTuple(const HyperringTable& a, std::span<const ElementId> tuple,
                int arity, const char* op) {
  if (tuple.size() != static_cast<std::size_t>(arity)) {
    throw StructureError(std::string("arity mismatch: ") + op + " takes " +
                         std::to_string(arity) + " arguments, got " +
                         std::to_string(tuple.size()));
  }
  for (ElementId x : tuple) {
    if (x >= a.size()) {
      throw StructureError(std::string("unknown element id ") +
                           std::to_string(x) + " passed to " + op);
    }
  }
}

void checkSets(const HyperringTable& a, std::span<const ElementSet> sets,
               int arity, const char* op) {
  if (sets.size() != static_cast<std::size_t>(arity)) {
    throw StructureError(std::string("arity mismatch: ") + op + " takes " +
                         std::to_string(arity) + " arguments, got " +
                         std::to_string(sets.size()));
  }
  for (ElementSet s : sets) {
    if (s.empty()) throw StructureError(std::string("empty input set to ") + op);
    if (!s.isSubsetOf(a.carrier())) {
      throw StructureError(std::string("unknown element passed to ") + op);
    }
  }
}

/// Visits every choice tuple of one element per set.
template <typename Fn>
void forEachChoice(std::span<const ElementSet> sets, Fn&& fn) {
  std::vector<std::vector<ElementId>> pools;
  pools.reserve(sets.size());
  for (ElementSet s : sets) pools.push_back(s.toVector());
  std::vector<std::size_t> idx(sets.size(), 0);
  std::vector<ElementId> tuple(sets.size());
  while (true) {
    for (std::size_t i = 0; i < sets.size(); ++i) tuple[i] = pools[i][idx[i]];
    fn(std::span<const ElementId>(tuple));
    std::size_t pos = sets.size();
    while (pos > 0 && idx[pos - 1] + 1 == pools[pos - 1].size()) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < sets.size(); ++i) idx[i] = 0;
  }
}

}  // namespace

ElementSet evalF(const HyperringTable& a, std::span<const ElementId> tuple) {
  checkTuple(a, tuple, a.m(), "f");
  return a.f(tuple);
}

ElementId evalG(const HyperringTable& a, std::span<const ElementId> tuple) {
  checkTuple(a, tuple, a.n(), "g");
  return a.g(tuple);
}

ElementSet evalFOnSets(const HyperringTable& a,
                       std::span<const ElementSet> sets) {
  checkSets(a, sets, a.m(), "f");
  ElementSet out;
  forEachChoice(sets, [&](std::span<const ElementId> t) { out |= a.f(t); });
  return out;
}

ElementSet evalGOnSets(const HyperringTable& a,
                       std::span<const ElementSet> sets) {
  checkSets(a, sets, a.n(), "g");
  ElementSet out;
  forEachChoice(sets, [&](std::span<const ElementId> t) { out.insert(a.g(t)); });
  return out;
}

ElementId evalGIterated(const HyperringTable& a, int l,
                        std::span<const ElementId> tuple) {
  const auto step = static_cast<std::size_t>(a.n() - 1);
  if (l < 1 || tuple.size() != static_cast<std::size_t>(l) * step + 1) {
    throw StructureError("g_(" + std::to_string(l) + ") needs " +
                         std::to_string(static_cast<std::size_t>(std::max(l, 1)) * step + 1) +
                         " arguments, got " + std::to_string(tuple.size()));
  }
  for (ElementId x : tuple) {
    if (x >= a.size()) throw StructureError("unknown element passed to g");
  }
  std::vector<ElementId> buf(tuple.begin(), tuple.begin() + a.n());
  ElementId acc = a.g(buf);
  for (std::size_t pos = static_cast<std::size_t>(a.n()); pos < tuple.size();
       pos += step) {
    buf[0] = acc;
    std::copy(tuple.begin() + static_cast<std::ptrdiff_t>(pos),
              tuple.begin() + static_cast<std::ptrdiff_t>(pos + step),
              buf.begin() + 1);
    acc = a.g(buf);
  }
  return acc;
}

ElementId power(const HyperringTable& a, ElementId x, unsigned k) {
  if (k == 0) throw PreconditionError("power exponent must be positive");
  if (x >= a.size()) throw StructureError("unknown element passed to power");
  ElementId p = x;
  for (unsigned i = 1; i < k; ++i) p = a.mul(p, x);
  return p;
}

const AxiomViolation* AxiomReport::find(std::string_view axiom) const {
  for (const auto& v : violations) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

std::string formatSet(const HyperringTable& a, ElementSet set) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : set) {
    if (!first) out += ",";
    first = false;
    out += a.label(x);
  }
  return out + "}";
}

std::string formatTuple(const HyperringTable& a,
                        std::span<const ElementId> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += a.label(tuple[i]);
  }
  return out + ")";
}

namespace {

class AxiomChecker {
 public:
  explicit AxiomChecker(const HyperringTable& a)
      : a_(a), m_(a.m()), n_(a.n()), size_(a.size()) {}

  AxiomReport run() {
    fAssociativity();
    reproducibility();
    scalarNeutral();
    inverses();
    reversibility();
    gAssociativity();
    distributivity();
    zeroAbsorption();
    gIdentity();
    return std::move(report_);
  }

 private:
  void fail(std::string axiom, std::span<const ElementId> witness,
            std::string why) {
    report_.violations.push_back(
        {std::move(axiom), std::vector<ElementId>(witness.begin(), witness.end()),
         std::move(why)});
  }

  ElementSet fOfSetAndRest(ElementSet inner, std::span<const ElementId> rest) {
    ElementSet out;
    std::vector<ElementId> buf(static_cast<std::size_t>(m_));
    std::copy(rest.begin(), rest.end(), buf.begin() + 1);
    for (ElementId y : inner) {
      buf[0] = y;
      out |= a_.f(buf);
    }
    return out;
  }

  // With commutative tables, associativity for every tuple and every window
  // is equivalent to: for each (2m-1)-multiset, f(f(W), rest) is the same for
  // every m-sub-multiset W.
  void fAssociativity() {
    const auto subsets = positionSubsets(2 * m_ - 1, m_);
    std::vector<ElementId> inner(static_cast<std::size_t>(m_));
    std::vector<ElementId> rest(static_cast<std::size_t>(m_ - 1));
    forEachMultiset(size_, 2 * m_ - 1, [&](std::span<const ElementId> t) {
      std::optional<ElementSet> reference;
      for (std::uint32_t mask : subsets) {
        split(t, mask, inner, rest);
        const ElementSet value = fOfSetAndRest(a_.f(inner), rest);
        if (!reference) {
          reference = value;
        } else if (*reference != value) {
          fail("f-associativity", t,
               "f" + formatTuple(a_, t) + " depends on the grouping");
          return false;
        }
      }
      return true;
    });
  }

  void reproducibility() {
    std::vector<ElementId> buf(static_cast<std::size_t>(m_));
    forEachMultiset(size_, m_ - 1, [&](std::span<const ElementId> t) {
      std::copy(t.begin(), t.end(), buf.begin());
      ElementSet reach;
      for (ElementId x = 0; x < size_; ++x) {
        buf.back() = x;
        reach |= a_.f(buf);
      }
      if (reach != a_.carrier()) {
        std::vector<ElementId> witness(t.begin(), t.end());
        const ElementId missing = (a_.carrier() - reach).first();
        witness.push_back(missing);
        fail("f-reproducibility", witness,
             a_.label(missing) + " is not in f" + formatTuple(a_, t) +
                 " extended by any element");
        return false;
      }
      return true;
    });
  }

  bool isScalarNeutral(ElementId e, ElementId* badX) {
    std::vector<ElementId> buf(static_cast<std::size_t>(m_), e);
    for (ElementId x = 0; x < size_; ++x) {
      buf[0] = x;
      if (a_.f(buf) != ElementSet::single(x)) {
        if (badX) *badX = x;
        return false;
      }
    }
    return true;
  }

  void scalarNeutral() {
    ElementId bad = 0;
    if (!isScalarNeutral(a_.zero(), &bad)) {
      const std::vector<ElementId> w{bad};
      fail("scalar-neutral", w,
           "f(" + a_.label(bad) + ", zero...) is not {" + a_.label(bad) + "}");
      return;
    }
    for (ElementId e = 0; e < size_; ++e) {
      if (e != a_.zero() && isScalarNeutral(e, nullptr)) {
        const std::vector<ElementId> w{e};
        fail("scalar-neutral", w,
             a_.label(e) + " is a second scalar neutral element");
        return;
      }
    }
  }

  void inverses() {
    std::vector<ElementId> buf(static_cast<std::size_t>(m_), a_.zero());
    for (ElementId x = 0; x < size_; ++x) {
      ElementSet candidates;
      for (ElementId y = 0; y < size_; ++y) {
        buf[0] = x;
        buf[1] = y;
        if (a_.f(buf).contains(a_.zero())) candidates.insert(y);
      }
      if (candidates.size() != 1) {
        const std::vector<ElementId> w{x};
        fail("inverse", w,
             a_.label(x) + " has " + std::to_string(candidates.size()) +
                 " additive inverses " + formatSet(a_, candidates));
        return;
      }
      if (candidates.first() != a_.negation(x)) {
        const std::vector<ElementId> w{x, a_.negation(x)};
        fail("inverse", w,
             "declared negation of " + a_.label(x) + " is " +
                 a_.label(a_.negation(x)) + " but the inverse is " +
                 a_.label(candidates.first()));
        return;
      }
    }
  }

  void reversibility() {
    std::vector<ElementId> buf(static_cast<std::size_t>(m_));
    forEachMultiset(size_, m_, [&](std::span<const ElementId> t) {
      for (ElementId x : a_.f(t)) {
        for (std::size_t i = 0; i < t.size(); ++i) {
          buf[0] = x;
          std::size_t k = 1;
          for (std::size_t j = 0; j < t.size(); ++j) {
            if (j != i) buf[k++] = a_.negation(t[j]);
          }
          if (!a_.f(buf).contains(t[i])) {
            std::vector<ElementId> witness(t.begin(), t.end());
            witness.push_back(x);
            fail("reversibility", witness,
                 a_.label(x) + " in f" + formatTuple(a_, t) + " but " +
                     a_.label(t[i]) + " is not in f" + formatTuple(a_, buf));
            return false;
          }
        }
      }
      return true;
    });
  }

  void gAssociativity() {
    const auto subsets = positionSubsets(2 * n_ - 1, n_);
    std::vector<ElementId> inner(static_cast<std::size_t>(n_));
    std::vector<ElementId> rest(static_cast<std::size_t>(n_ - 1));
    std::vector<ElementId> outer(static_cast<std::size_t>(n_));
    forEachMultiset(size_, 2 * n_ - 1, [&](std::span<const ElementId> t) {
      std::optional<ElementId> reference;
      for (std::uint32_t mask : subsets) {
        split(t, mask, inner, rest);
        outer[0] = a_.g(inner);
        std::copy(rest.begin(), rest.end(), outer.begin() + 1);
        const ElementId value = a_.g(outer);
        if (!reference) {
          reference = value;
        } else if (*reference != value) {
          fail("g-associativity", t,
               "g" + formatTuple(a_, t) + " depends on the grouping");
          return false;
        }
      }
      return true;
    });
  }

  // Slot 1 suffices: g is commutative by construction.
  void distributivity() {
    std::vector<ElementId> gbuf(static_cast<std::size_t>(n_));
    std::vector<ElementId> fbuf(static_cast<std::size_t>(m_));
    bool failed = false;
    forEachMultiset(size_, n_ - 1, [&](std::span<const ElementId> others) {
      std::copy(others.begin(), others.end(), gbuf.begin() + 1);
      forEachMultiset(size_, m_, [&](std::span<const ElementId> xs) {
        ElementSet lhs;
        for (ElementId y : a_.f(xs)) {
          gbuf[0] = y;
          lhs.insert(a_.g(gbuf));
        }
        for (std::size_t j = 0; j < xs.size(); ++j) {
          gbuf[0] = xs[j];
          fbuf[j] = a_.g(gbuf);
        }
        const ElementSet rhs = a_.f(fbuf);
        if (lhs != rhs) {
          std::vector<ElementId> witness(xs.begin(), xs.end());
          witness.insert(witness.end(), others.begin(), others.end());
          fail("distributivity", witness,
               "g(f" + formatTuple(a_, xs) + ", " + formatTuple(a_, others) +
                   ") = " + formatSet(a_, lhs) + " but f of the products = " +
                   formatSet(a_, rhs));
          failed = true;
          return false;
        }
        return true;
      });
      return !failed;
    });
  }

  void zeroAbsorption() {
    std::vector<ElementId> buf(static_cast<std::size_t>(n_));
    buf[0] = a_.zero();
    forEachMultiset(size_, n_ - 1, [&](std::span<const ElementId> t) {
      std::copy(t.begin(), t.end(), buf.begin() + 1);
      if (a_.g(buf) != a_.zero()) {
        fail("zero-absorption", buf,
             "g" + formatTuple(a_, buf) + " = " + a_.label(a_.g(buf)));
        return false;
      }
      return true;
    });
  }

  void gIdentity() {
    std::vector<ElementId> buf(static_cast<std::size_t>(n_), a_.one());
    for (ElementId x = 0; x < size_; ++x) {
      buf[0] = x;
      if (a_.g(buf) != x) {
        const std::vector<ElementId> w{x};
        fail("g-identity", w,
             "g(" + a_.label(x) + ", one...) = " + a_.label(a_.g(buf)));
        return;
      }
    }
  }

  static void split(std::span<const ElementId> t, std::uint32_t mask,
                    std::vector<ElementId>& inner,
                    std::vector<ElementId>& rest) {
    std::size_t i = 0;
    std::size_t r = 0;
    for (std::size_t p = 0; p < t.size(); ++p) {
      if ((mask >> p) & 1U) {
        inner[i++] = t[p];
      } else {
        rest[r++] = t[p];
      }
    }
  }

  const HyperringTable& a_;
  int m_;
  int n_;
  ElementId size_;
  AxiomReport report_;
};

}  // namespace

AxiomReport checkAxioms(const HyperringTable& a) {
  return AxiomChecker(a).run();
}

}  // namespace krasner
