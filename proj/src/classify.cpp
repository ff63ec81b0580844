#include "krasner/classify.hpp"

#include <algorithm>

#include "krasner/ideals.hpp"
#include "krasner/radical.hpp"

namespace krasner {

namespace {

struct NameEntry {
  Predicate predicate;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {Predicate::Prime, "prime"},
    {Predicate::Primary, "primary"},
    {Predicate::SPrime, "sPrime"},
    {Predicate::SPrimary, "sPrimary"},
    {Predicate::WeaklySPrime, "weaklySPrime"},
    {Predicate::WeaklySPrimary, "weaklySPrimary"},
    {Predicate::StronglyWeaklySPrimary, "stronglyWeaklySPrimary"},
};

bool isWeak(Predicate p) {
  return p == Predicate::WeaklySPrime || p == Predicate::WeaklySPrimary;
}

bool usesRadical(Predicate p) {
  return p == Predicate::Primary || p == Predicate::SPrimary ||
         p == Predicate::WeaklySPrimary ||
         p == Predicate::StronglyWeaklySPrimary;
}

std::string describeSet(const HyperringTable& a, ElementSet q) {
  return formatSet(a, q);
}

}  // namespace

std::string_view predicateName(Predicate p) {
  for (const auto& e : kNames) {
    if (e.predicate == p) return e.name;
  }
  return "?";
}

std::optional<Predicate> parsePredicate(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.predicate;
  }
  return std::nullopt;
}

bool usesMulSet(Predicate p) {
  return p != Predicate::Prime && p != Predicate::Primary;
}

const PredicateVerdict& ClassificationReport::verdict(Predicate p) const {
  for (const auto& v : verdicts) {
    if (v.predicate == p) return v;
  }
  throw Error("predicate missing from report");
}

bool ClassificationReport::consistent() const {
  return std::all_of(implications.begin(), implications.end(),
                     [](const Implication& i) { return i.consistent; });
}

Analyzer::Analyzer(HyperringTable a, RadicalMode mode)
    : a_(std::move(a)), mode_(mode) {
  ideals_ = enumerateHyperideals(a_);
  primes_ = enumeratePrimes(a_, ideals_);
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    index_.emplace(ideals_[i].bits(), i);
    radicals_.push_back(mode_ == RadicalMode::Primes
                            ? radicalByPrimes(a_, ideals_[i], primes_).members
                            : radicalByPowers(a_, ideals_[i]).members);
  }
  if (ideals_.size() <= kMaxCarrier) {
    idealProducts_.resize(multisetCount(ideals_.size(), a_.n()));
    std::vector<ElementSet> sets(static_cast<std::size_t>(a_.n()));
    forEachMultiset(ideals_.size(), a_.n(), [&](std::span<const ElementId> t) {
      for (std::size_t i = 0; i < t.size(); ++i) sets[i] = ideals_[t[i]];
      idealProducts_[multisetRank(t)] = setProduct(a_, sets);
      return true;
    });
  }
}

ElementSet Analyzer::radical(ElementSet q) const {
  const auto it = index_.find(q.bits());
  if (it == index_.end()) {
    throw PreconditionError(describeSet(a_, q) + " is not a hyperideal");
  }
  return radicals_[it->second];
}

void Analyzer::checkPreconditions(Predicate p, ElementSet q,
                                  ElementSet s) const {
  if (!isIdeal(q)) {
    throw PreconditionError(describeSet(a_, q) + " is not a hyperideal");
  }
  if (!usesMulSet(p)) {
    if (q == a_.carrier()) {
      throw PreconditionError(std::string(predicateName(p)) +
                              " needs a proper hyperideal");
    }
    return;
  }
  if (s.empty()) throw PreconditionError("multiplicative set is empty");
  if (!s.isSubsetOf(a_.carrier())) {
    throw PreconditionError("multiplicative set has unknown elements");
  }
  if (q.intersects(s)) {
    throw PreconditionError("Q " + describeSet(a_, q) + " meets S " +
                            describeSet(a_, s));
  }
}

std::optional<Counterexample> Analyzer::refuteElementwise(
    Predicate p, ElementSet q, ElementSet rad,
    std::optional<ElementId> s) const {
  const bool weak = isWeak(p);
  std::vector<ElementId> buf(static_cast<std::size_t>(a_.n()));
  auto clause = [&](std::span<const ElementId> t, std::size_t i) {
    switch (p) {
      case Predicate::Prime:
        return q.contains(t[i]);
      case Predicate::Primary: {
        if (q.contains(t[i])) return true;
        std::copy(t.begin(), t.end(), buf.begin());
        buf[i] = a_.one();
        return rad.contains(a_.g(buf));
      }
      case Predicate::SPrime:
      case Predicate::WeaklySPrime:
        return q.contains(a_.mul(*s, t[i]));
      default: {
        if (q.contains(a_.mul(*s, t[i]))) return true;
        std::copy(t.begin(), t.end(), buf.begin());
        buf[i] = *s;
        return rad.contains(a_.g(buf));
      }
    }
  };
  std::optional<Counterexample> found;
  forEachMultiset(a_.size(), a_.n(), [&](std::span<const ElementId> t) {
    const ElementId y = a_.g(t);
    if (!q.contains(y) || (weak && y == a_.zero())) return true;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (clause(t, i)) return true;
    }
    Counterexample c;
    c.s = s;
    c.tuple.assign(t.begin(), t.end());
    c.clause = "g" + formatTuple(a_, t) + " = " + a_.label(y) +
               " is in Q but no position satisfies the " +
               std::string(predicateName(p)) + " clause";
    found = std::move(c);
    return false;
  });
  return found;
}

std::optional<Counterexample> Analyzer::refuteIdealwise(ElementSet q,
                                                        ElementSet rad,
                                                        ElementId s) const {
  const auto n = static_cast<std::size_t>(a_.n());
  const ElementSet zeroSet = ElementSet::single(a_.zero());
  const ElementSet sSet = ElementSet::single(s);
  std::vector<ElementSet> sets(n);
  std::optional<Counterexample> found;
  forEachMultiset(ideals_.size(), a_.n(), [&](std::span<const ElementId> t) {
    for (std::size_t i = 0; i < n; ++i) sets[i] = ideals_[t[i]];
    const ElementSet prod = idealProducts_.empty()
                                ? setProduct(a_, sets)
                                : idealProducts_[multisetRank(t)];
    if (prod == zeroSet || !prod.isSubsetOf(q)) return true;
    for (std::size_t i = 0; i < n; ++i) {
      bool inside = true;
      for (ElementId x : sets[i]) {
        if (!q.contains(a_.mul(s, x))) {
          inside = false;
          break;
        }
      }
      if (inside) return true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const ElementSet keep = sets[i];
      sets[i] = sSet;
      const bool inRad = setProduct(a_, sets).isSubsetOf(rad);
      sets[i] = keep;
      if (inRad) return true;
    }
    Counterexample c;
    c.s = s;
    c.ideals = sets;
    std::string names;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) names += ", ";
      names += formatSet(a_, sets[i]);
    }
    c.clause = "g(" + names + ") = " + formatSet(a_, prod) +
               " is a nonzero subset of Q but no position satisfies the "
               "stronglyWeaklySPrimary clause";
    found = std::move(c);
    return false;
  });
  return found;
}

std::optional<Counterexample> Analyzer::refute(Predicate p, ElementSet q,
                                               ElementId s) const {
  const ElementSet rad = usesRadical(p) ? radical(q) : ElementSet{};
  if (!isIdeal(q)) {
    throw PreconditionError(describeSet(a_, q) + " is not a hyperideal");
  }
  if (s >= a_.size()) throw StructureError("unknown element");
  if (p == Predicate::StronglyWeaklySPrimary) {
    return refuteIdealwise(q, rad, s);
  }
  return refuteElementwise(
      p, q, rad, usesMulSet(p) ? std::optional<ElementId>(s) : std::nullopt);
}

PredicateVerdict Analyzer::evaluate(Predicate p, ElementSet q,
                                    ElementSet s) const {
  checkPreconditions(p, q, s);
  PredicateVerdict v;
  v.predicate = p;
  if (!usesMulSet(p)) {
    const ElementSet rad = usesRadical(p) ? radical(q) : ElementSet{};
    v.counterexample = refuteElementwise(p, q, rad, std::nullopt);
    v.holds = !v.counterexample;
    return v;
  }
  std::optional<Counterexample> first;
  for (ElementId candidate : s) {
    auto c = refute(p, q, candidate);
    if (!c) {
      v.holds = true;
      v.witness = candidate;
      return v;
    }
    if (!first) first = std::move(c);
  }
  v.counterexample = std::move(first);
  return v;
}

ClassificationReport Analyzer::classifyAll(ElementSet q, ElementSet s) const {
  if (const auto check = isMulSet(a_, s); !check) {
    throw PreconditionError("S is not a multiplicative set: " + check.reason);
  }
  ClassificationReport r;
  r.q = q;
  r.s = s;
  for (Predicate p : kAllPredicates) r.verdicts.push_back(evaluate(p, q, s));
  auto holds = [&](Predicate p) { return r.verdict(p).holds; };
  auto implies = [&](Predicate x, Predicate y) {
    r.implications.push_back(
        {std::string(predicateName(x)) + "=>" + std::string(predicateName(y)),
         !holds(x) || holds(y)});
  };
  implies(Predicate::Prime, Predicate::Primary);
  implies(Predicate::Primary, Predicate::SPrimary);
  implies(Predicate::SPrimary, Predicate::WeaklySPrimary);
  implies(Predicate::Prime, Predicate::SPrime);
  implies(Predicate::SPrime, Predicate::WeaklySPrime);
  implies(Predicate::WeaklySPrime, Predicate::WeaklySPrimary);
  implies(Predicate::StronglyWeaklySPrimary, Predicate::WeaklySPrimary);
  if (s == ElementSet::single(a_.one())) {
    r.implications.push_back(
        {"sPrime<=>prime", holds(Predicate::SPrime) == holds(Predicate::Prime)});
    r.implications.push_back({"sPrimary<=>primary", holds(Predicate::SPrimary) ==
                                                        holds(Predicate::Primary)});
  }
  return r;
}

std::vector<std::string> Analyzer::describeClauses(
    Predicate p, ElementSet q, const Counterexample& c) const {
  std::vector<std::string> out;
  const ElementSet rad = usesRadical(p) ? radical(q) : ElementSet{};
  auto mark = [](bool in) { return in ? " in " : " not in "; };
  if (!c.ideals.empty()) {
    for (std::size_t i = 0; i < c.ideals.size(); ++i) {
      ElementSet scaled;
      for (ElementId x : c.ideals[i]) scaled.insert(a_.mul(*c.s, x));
      std::vector<ElementSet> sets = c.ideals;
      sets[i] = ElementSet::single(*c.s);
      const ElementSet replaced = setProduct(a_, sets);
      out.push_back("  i=" + std::to_string(i + 1) + ": g(s, Q_i, 1) = " +
                    formatSet(a_, scaled) +
                    (scaled.isSubsetOf(q) ? " inside Q" : " not inside Q") +
                    "; product with s in slot i = " +
                    formatSet(a_, replaced) +
                    (replaced.isSubsetOf(rad) ? " inside rad(Q)"
                                              : " not inside rad(Q)"));
    }
    return out;
  }
  std::vector<ElementId> buf;
  for (std::size_t i = 0; i < c.tuple.size(); ++i) {
    std::string line = "  i=" + std::to_string(i + 1) + ": ";
    switch (p) {
      case Predicate::Prime:
        line += a_.label(c.tuple[i]) + mark(q.contains(c.tuple[i])) + "Q";
        break;
      case Predicate::Primary: {
        buf = c.tuple;
        buf[i] = a_.one();
        const ElementId y = a_.g(buf);
        line += a_.label(c.tuple[i]) + mark(q.contains(c.tuple[i])) +
                "Q; g" + formatTuple(a_, buf) + " = " + a_.label(y) +
                mark(rad.contains(y)) + "rad(Q)";
        break;
      }
      default: {
        const ElementId sx = a_.mul(*c.s, c.tuple[i]);
        line += "g(s," + a_.label(c.tuple[i]) + ",1) = " + a_.label(sx) +
                mark(q.contains(sx)) + "Q";
        if (usesRadical(p)) {
          buf = c.tuple;
          buf[i] = *c.s;
          const ElementId y = a_.g(buf);
          line += "; g" + formatTuple(a_, buf) + " = " + a_.label(y) +
                  mark(rad.contains(y)) + "rad(Q)";
        }
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> Analyzer::explain(Predicate p, ElementSet q,
                                           ElementSet s) const {
  checkPreconditions(p, q, s);
  std::vector<std::string> out;
  out.push_back(std::string(predicateName(p)) + " of Q = " + formatSet(a_, q) +
                (usesMulSet(p) ? " with S = " + formatSet(a_, s) : ""));
  if (usesRadical(p)) out.push_back("rad(Q) = " + formatSet(a_, radical(q)));
  auto report = [&](const Counterexample& c) {
    out.push_back("  counterexample: " + c.clause);
    for (auto& line : describeClauses(p, q, c)) out.push_back(std::move(line));
  };
  if (!usesMulSet(p)) {
    if (auto c = refute(p, q, a_.one())) {
      report(*c);
      out.push_back("verdict: false");
    } else {
      out.push_back("  every product landing in Q satisfies the clause");
      out.push_back("verdict: true");
    }
    return out;
  }
  for (ElementId candidate : s) {
    out.push_back("s = " + a_.label(candidate) + ":");
    if (auto c = refute(p, q, candidate)) {
      report(*c);
    } else {
      out.push_back("  witness: every product landing in Q satisfies the clause");
      out.push_back("verdict: true, witness " + a_.label(candidate));
      return out;
    }
  }
  out.push_back("verdict: false");
  return out;
}

namespace {

PredicateVerdict run(const HyperringTable& a, Predicate p, ElementSet q,
                     ElementSet s) {
  return Analyzer(a).evaluate(p, q, s);
}

}  // namespace

PredicateVerdict isPrime(const HyperringTable& a, ElementSet q) {
  return run(a, Predicate::Prime, q, {});
}
PredicateVerdict isPrimary(const HyperringTable& a, ElementSet q) {
  return run(a, Predicate::Primary, q, {});
}
PredicateVerdict isSPrime(const HyperringTable& a, ElementSet q, ElementSet s) {
  return run(a, Predicate::SPrime, q, s);
}
PredicateVerdict isSPrimary(const HyperringTable& a, ElementSet q,
                            ElementSet s) {
  return run(a, Predicate::SPrimary, q, s);
}
PredicateVerdict isWeaklySPrime(const HyperringTable& a, ElementSet q,
                                ElementSet s) {
  return run(a, Predicate::WeaklySPrime, q, s);
}
PredicateVerdict isWeaklySPrimary(const HyperringTable& a, ElementSet q,
                                  ElementSet s) {
  return run(a, Predicate::WeaklySPrimary, q, s);
}
PredicateVerdict isStronglyWeaklySPrimary(const HyperringTable& a,
                                          ElementSet q, ElementSet s) {
  return run(a, Predicate::StronglyWeaklySPrimary, q, s);
}
ClassificationReport classifyAll(const HyperringTable& a, ElementSet q,
                                 ElementSet s) {
  return Analyzer(a).classifyAll(q, s);
}

}  // namespace krasner
