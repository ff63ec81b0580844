#include <doctest.h>

#include "krasner/builders.hpp"
#include "krasner/classify.hpp"
#include "krasner/ideals.hpp"
#include "krasner/radical.hpp"
#include "krasner/theorems.hpp"
#include "oracles.hpp"

using namespace krasner;

namespace {

HyperringTable zh12() { return quotientByUnits({12, {1, 5, 7, 11}, 3}); }

ElementSet labels(const HyperringTable& a, std::initializer_list<const char*> xs) {
  ElementSet out;
  for (const char* x : xs) out.insert(*a.find(x));
  return out;
}

ElementSet productOfSets(const HyperringTable& a, const std::vector<ElementSet>& sets) {
  ElementSet out;
  std::vector<std::vector<ElementId>> members;
  for (ElementSet s : sets) members.push_back(s.toVector());
  std::vector<std::size_t> pos(sets.size(), 0);
  while (true) {
    std::vector<ElementId> t;
    for (std::size_t i = 0; i < sets.size(); ++i) t.push_back(members[i][pos[i]]);
    out.insert(a.g(t));
    std::size_t k = sets.size();
    while (k > 0 && pos[k - 1] + 1 == members[k - 1].size()) pos[--k] = 0;
    if (k == 0) return out;
    ++pos[k - 1];
  }
}

bool stronglyWeaklyOracle(const HyperringTable& a, ElementSet q, ElementSet s,
                          ElementSet rad, const std::vector<ElementSet>& lattice) {
  const auto n = static_cast<std::size_t>(a.n());
  const ElementSet zero{a.zero()};
  for (ElementId w : s) {
    bool works = true;
    oracle::tuples(lattice.size(), n, [&](const std::vector<ElementId>& idx) {
      if (!works) return;
      std::vector<ElementSet> qs;
      for (ElementId i : idx) qs.push_back(lattice[i]);
      const ElementSet prod = productOfSets(a, qs);
      if (prod == zero || !prod.isSubsetOf(q)) return;
      bool some = false;
      for (std::size_t i = 0; i < n && !some; ++i) {
        std::vector<ElementSet> sq(n, ElementSet{a.one()});
        sq[0] = ElementSet{w};
        sq[1] = qs[i];
        if (productOfSets(a, sq).isSubsetOf(q)) some = true;
        std::vector<ElementSet> r = qs;
        r[i] = ElementSet{w};
        if (productOfSets(a, r).isSubsetOf(rad)) some = true;
      }
      works = some;
    });
    if (works) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("predicate names round-trip") {
  for (Predicate p : kAllPredicates) CHECK(parsePredicate(predicateName(p)) == p);
  CHECK_FALSE(parsePredicate("semiprime"));
  CHECK(predicateName(Predicate::WeaklySPrimary) == "weaklySPrimary");
}

TEST_CASE("the Z_12 example classification") {
  const HyperringTable a = zh12();
  const ElementSet q = labels(a, {"0", "4"});
  const ElementSet s = labels(a, {"1", "3"});
  const ClassificationReport r = classifyAll(a, q, s);
  CHECK(r.consistent());

  const auto& weak = r.verdict(Predicate::WeaklySPrimary);
  CHECK(weak.holds);
  REQUIRE(weak.witness);
  CHECK(a.label(*weak.witness) == "1");
  // 3 is a witness as well.
  const Analyzer an(a);
  CHECK_FALSE(an.refute(Predicate::WeaklySPrimary, q, *a.find("3")));

  const auto& sPrime = r.verdict(Predicate::SPrime);
  CHECK_FALSE(sPrime.holds);
  REQUIRE(sPrime.counterexample);
  CHECK(formatTuple(a, sPrime.counterexample->tuple) == "(1,2,2)");

  // (2,2,3) refutes every candidate s: g(2,2,3) = 0 lies in Q while
  // neither g(s,2,1) nor g(s,3,1) does.
  const std::vector<ElementId> t{*a.find("2"), *a.find("2"), *a.find("3")};
  CHECK(q.contains(a.g(t)));
  for (ElementId w : s) {
    for (ElementId x : t) CHECK_FALSE(q.contains(a.mul(w, x)));
  }

  CHECK_FALSE(r.verdict(Predicate::Prime).holds);
  CHECK(r.verdict(Predicate::Primary).holds);
  CHECK(r.verdict(Predicate::SPrimary).holds);
  CHECK_FALSE(r.verdict(Predicate::WeaklySPrime).holds);
  CHECK(r.verdict(Predicate::StronglyWeaklySPrimary).holds);
}

TEST_CASE("primary under the some-i reading") {
  const HyperringTable a = zh12();
  // (2,3,1): replacing the third slot by 1 leaves g = 0 in rad{0,6}.
  const PredicateVerdict v = isPrimary(a, labels(a, {"0", "6"}));
  CHECK(v.holds);
  CHECK(formatSet(a, radicalByPowers(a, labels(a, {"0", "6"})).members) == "{0,6}");
}

TEST_CASE("predicates agree with the literal quantifier oracle") {
  const Corpus corpus = buildCorpus({9, 3, true});
  std::size_t bindings = 0;
  for (const auto& c : corpus.structures) {
    const HyperringTable& a = c.table();
    const Analyzer& an = *c.analyzer;
    const ElementSet one{a.one()};
    for (ElementSet q : an.ideals()) {
      const ElementSet rad = oracle::radical(a, q, an.ideals());
      if (q != a.carrier()) {
        CHECK(an.evaluate(Predicate::Prime, q).holds == oracle::isPrime(a, q));
        CHECK(an.evaluate(Predicate::Primary, q).holds ==
              oracle::sPredicate(a, q, one, rad, oracle::Kind::Primary, false));
      }
      for (ElementSet s : c.mulsets) {
        if (q.intersects(s)) continue;
        ++bindings;
        const std::string where = c.name + " Q=" + formatSet(a, q) +
                                  " S=" + formatSet(a, s);
        using oracle::Kind;
        CHECK_MESSAGE(an.evaluate(Predicate::SPrime, q, s).holds ==
                          oracle::sPredicate(a, q, s, rad, Kind::Prime, false),
                      where);
        CHECK_MESSAGE(an.evaluate(Predicate::SPrimary, q, s).holds ==
                          oracle::sPredicate(a, q, s, rad, Kind::Primary, false),
                      where);
        CHECK_MESSAGE(an.evaluate(Predicate::WeaklySPrime, q, s).holds ==
                          oracle::sPredicate(a, q, s, rad, Kind::Prime, true),
                      where);
        CHECK_MESSAGE(an.evaluate(Predicate::WeaklySPrimary, q, s).holds ==
                          oracle::sPredicate(a, q, s, rad, Kind::Primary, true),
                      where);
        CHECK_MESSAGE(an.evaluate(Predicate::StronglyWeaklySPrimary, q, s).holds ==
                          stronglyWeaklyOracle(a, q, s, rad, an.ideals()),
                      where);
      }
    }
  }
  CHECK(bindings > 100);
}

TEST_CASE("witnesses are least and counterexamples refute the least s") {
  const Corpus corpus = buildCorpus({8, 4, true});
  for (const auto& c : corpus.structures) {
    const Analyzer& an = *c.analyzer;
    for (ElementSet q : an.ideals()) {
      for (ElementSet s : c.mulsets) {
        if (q.intersects(s)) continue;
        for (Predicate p : kAllPredicates) {
          if (!usesMulSet(p)) continue;
          const PredicateVerdict v = an.evaluate(p, q, s);
          if (v.holds) {
            REQUIRE(v.witness);
            CHECK_FALSE(an.refute(p, q, *v.witness));
            for (ElementId w : s) {
              if (w < *v.witness) CHECK(an.refute(p, q, w));
            }
          } else {
            REQUIRE(v.counterexample);
            CHECK(v.counterexample->s == s.first());
          }
        }
      }
    }
  }
}

TEST_CASE("implication lattice holds on every binding") {
  const Corpus corpus = buildCorpus({16, 4, true});
  std::size_t reports = 0;
  for (const auto& c : corpus.structures) {
    const Analyzer& an = *c.analyzer;
    const ElementSet one{c.table().one()};
    for (ElementSet q : an.ideals()) {
      if (q == c.table().carrier()) continue;
      for (ElementSet s : c.mulsets) {
        if (q.intersects(s)) continue;
        const ClassificationReport r = an.classifyAll(q, s);
        ++reports;
        for (const auto& i : r.implications) {
          CHECK_MESSAGE(i.consistent, c.name << " " << i.name);
        }
        if (s == one) {
          CHECK(r.verdict(Predicate::SPrime).holds == r.verdict(Predicate::Prime).holds);
          CHECK(r.verdict(Predicate::SPrimary).holds ==
                r.verdict(Predicate::Primary).holds);
        }
      }
    }
  }
  CHECK(reports > 1000);
}

TEST_CASE("preconditions") {
  const HyperringTable a = zh12();
  CHECK_THROWS_AS(isWeaklySPrimary(a, labels(a, {"0", "4"}), labels(a, {"1", "4"})),
                  PreconditionError);
  CHECK_THROWS_AS(isSPrime(a, labels(a, {"0", "2"}), labels(a, {"1"})),
                  PreconditionError);
  CHECK_THROWS_AS(isPrime(a, a.carrier()), PreconditionError);
}

TEST_CASE("explain traces every candidate") {
  const HyperringTable a = zh12();
  const Analyzer an(a);
  const auto trace = an.explain(Predicate::SPrime, labels(a, {"0", "4"}),
                                labels(a, {"1", "3"}));
  CHECK(trace.size() >= 2);
  const auto ok = an.explain(Predicate::WeaklySPrimary, labels(a, {"0", "4"}),
                             labels(a, {"1", "3"}));
  CHECK_FALSE(ok.empty());
}
