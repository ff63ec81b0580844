// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz.hpp"
#include "krasner/builders.hpp"
#include "krasner/classify.hpp"
#include "krasner/fractions.hpp"
#include "krasner/ideals.hpp"
#include "krasner/radical.hpp"
#include "krasner/theorems.hpp"
#include "oracles.hpp"

using namespace krasner;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Report {
 public:
  void fail(const std::string& why) {
    if (outcome_.passed) outcome_.detail = why;
    outcome_.passed = false;
  }
  void note(const std::string& text) {
    if (outcome_.passed) outcome_.detail = text;
  }
  Outcome take() { return outcome_; }

 private:
  Outcome outcome_;
};

ElementSet labels(const HyperringTable& a, std::initializer_list<const char*> xs) {
  ElementSet out;
  for (const char* x : xs) out.insert(*a.find(x));
  return out;
}

HyperringTable zh12() { return quotientByUnits({12, {1, 5, 7, 11}, 3}); }

Outcome exampleReproduction() {
  Report r;
  const HyperringTable a = zh12();
  const ElementSet q = labels(a, {"0", "4"});
  const ElementSet s = labels(a, {"1", "3"});
  const ElementSet expected = labels(a, {"0", "2", "4", "6"});
  if (!checkAxioms(a).passed()) r.fail("axioms fail");
  if (radicalByPrimes(a, q).members != expected) r.fail("radicalByPrimes differs");
  if (radicalByPowers(a, q).members != expected) r.fail("radicalByPowers differs");
  if (!isWeaklySPrimary(a, q, s).holds) r.fail("not weakly S-primary");
  const PredicateVerdict sPrime = isSPrime(a, q, s);
  if (sPrime.holds) r.fail("reported S-prime");
  // (2,2,3) must refute every candidate s.
  const Analyzer an(a);
  const std::vector<ElementId> t{*a.find("2"), *a.find("2"), *a.find("3")};
  bool refutesAll = q.contains(a.g(t));
  for (ElementId w : s) {
    for (ElementId x : t) refutesAll = refutesAll && !q.contains(a.mul(w, x));
    refutesAll = refutesAll && an.refute(Predicate::SPrime, q, w).has_value();
  }
  if (!refutesAll) r.fail("(2,2,3) is not a valid counterexample");
  if (sPrime.counterexample) {
    r.note("stored counterexample " + formatTuple(a, sPrime.counterexample->tuple) +
           ", (2,2,3) also valid");
  }
  return r.take();
}

Outcome idealLattice(const Corpus& corpus) {
  Report r;
  std::size_t checked = 0;
  for (const auto& c : corpus.structures) {
    const HyperringTable& a = c.table();
    if (a.size() > 12) continue;
    auto expected = oracle::ideals(a);
    std::sort(expected.begin(), expected.end(), canonicalLess);
    if (enumerateHyperideals(a) != expected) r.fail("lattice differs on " + c.name);
    ++checked;
  }
  const std::size_t zh = enumerateHyperideals(zh12()).size();
  if (zh != 6) r.fail("ZH12 has " + std::to_string(zh) + " hyperideals");
  r.note(std::to_string(checked) + " structures");
  return r.take();
}

Outcome radicalAgreement(const Corpus& corpus) {
  Report r;
  std::size_t checked = 0;
  for (const auto& c : corpus.structures) {
    const HyperringTable& a = c.table();
    for (ElementSet q : c.analyzer->ideals()) {
      const ElementSet byPrimes = radicalByPrimes(a, q).members;
      const ElementSet byPowers = radicalByPowers(a, q).members;
      if (byPrimes != byPowers) {
        r.fail(c.name + " Q=" + formatSet(a, q) + ": primes " + formatSet(a, byPrimes) +
               " powers " + formatSet(a, byPowers));
      }
      ++checked;
    }
  }
  r.note(std::to_string(checked) + " hyperideals");
  return r.take();
}

Outcome theoremSuite(const Corpus& corpus) {
  Report r;
  std::ostringstream failing;
  for (const PropertyResult& p : runSuite(corpus, {})) {
    std::cout << "  " << p.name << " instances=" << p.instances
              << " counterexamples=" << p.counterexampleCount
              << (p.passed() ? " PASS" : " FAIL") << "\n";
    if (p.passed()) continue;
    failing << " " << p.name;
    if (!p.counterexamples.empty()) {
      std::cout << "   first counterexample:";
      for (const auto& [k, v] : p.counterexamples.front().values) {
        std::cout << " " << k << "=" << v;
      }
      if (!p.counterexamples.front().note.empty()) {
        std::cout << " (" << p.counterexamples.front().note << ")";
      }
      std::cout << "\n";
    }
    if (!p.note.empty()) std::cout << "   " << p.note << "\n";
  }
  if (!failing.str().empty()) r.fail("failing:" + failing.str());
  return r.take();
}

Outcome implicationLattice(const Corpus& corpus) {
  Report r;
  std::size_t bindings = 0;
  for (const auto& c : corpus.structures) {
    const HyperringTable& a = c.table();
    const ElementSet one{a.one()};
    for (ElementSet q : c.analyzer->ideals()) {
      if (q == a.carrier()) continue;
      for (ElementSet s : c.mulsets) {
        if (q.intersects(s)) continue;
        ++bindings;
        const ClassificationReport report = c.analyzer->classifyAll(q, s);
        for (const auto& i : report.implications) {
          if (!i.consistent) {
            r.fail(c.name + " Q=" + formatSet(a, q) + " S=" + formatSet(a, s) + " " +
                   i.name);
          }
        }
        if (s == one &&
            (report.verdict(Predicate::SPrime).holds !=
                 report.verdict(Predicate::Prime).holds ||
             report.verdict(Predicate::SPrimary).holds !=
                 report.verdict(Predicate::Primary).holds)) {
          r.fail(c.name + " Q=" + formatSet(a, q) + " S={one} does not collapse");
        }
      }
    }
  }
  r.note(std::to_string(bindings) + " bindings");
  return r.take();
}

// 0 in g(u, f(a t, -(b s), 0, ...), 1, ...) for some u in S.
bool related(const HyperringTable& a, ElementSet s, ElementId x, ElementId sx,
             ElementId y, ElementId sy) {
  std::vector<ElementId> args(static_cast<std::size_t>(a.m()), a.zero());
  args[0] = a.mul(x, sy);
  args[1] = a.negation(a.mul(y, sx));
  for (ElementId z : a.f(args)) {
    for (ElementId u : s) {
      if (a.mul(u, z) == a.zero()) return true;
    }
  }
  return false;
}

Outcome localization(const Corpus& corpus) {
  Report r;
  std::size_t instances = 0;
  for (const auto& c : corpus.structures) {
    const HyperringTable& a = c.table();
    for (ElementSet s : c.mulsets) {
      if (!s.contains(a.one())) continue;
      const std::string where = c.name + " S=" + formatSet(a, s);
      std::optional<FractionStructure> built;
      try {
        built = localize(a, s);
      } catch (const Error& e) {
        r.fail(where + ": " + e.what());
        continue;
      }
      const FractionStructure& fs = *built;
      // The relation is an equivalence exactly when it is the kernel of
      // the class map.
      for (std::size_t i = 0; i < fs.pairs.size(); ++i) {
        for (std::size_t j = 0; j < fs.pairs.size(); ++j) {
          const auto [x, sx] = fs.pairs[i];
          const auto [y, sy] = fs.pairs[j];
          if (related(a, s, x, sx, y, sy) != (fs.classOf[i] == fs.classOf[j])) {
            r.fail(where + ": relation is not the class kernel");
          }
        }
      }
      if (!checkAxioms(fs.localized).passed()) r.fail(where + ": axioms fail");
      for (ElementSet q : c.analyzer->ideals()) {
        if (q.intersects(s)) continue;
        if (!c.analyzer->evaluate(Predicate::WeaklySPrimary, q, s).holds) continue;
        ++instances;
        const ElementSet back = contract(fs, extend(fs, q));
        bool found = false;
        for (ElementId t : s) found = found || back == (colon(a, q, t) | fs.zeroKernel);
        if (!found) r.fail(where + " Q=" + formatSet(a, q) + ": contraction mismatch");
      }
    }
  }
  const PropertyResult p7 = runSuite(corpus, {"P7"}).front();
  if (!p7.passed()) r.fail("saturation equivalence fails");
  r.note(std::to_string(instances) + " weakly S-primary instances, P7 instances " +
         std::to_string(p7.instances));
  return r.take();
}

Outcome parserFuzz() {
  Report r;
  const fuzz::Stats stats = fuzz::run(5000, 20240601);
  if (stats.unexpected || stats.unpositioned || stats.roundTripFailures) {
    r.fail(stats.firstProblem);
  }
  r.note(std::to_string(stats.total) + " documents, " + std::to_string(stats.valid) +
         " valid, " + std::to_string(stats.diagnostics) + " diagnostics");
  return r.take();
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const Corpus corpus = buildCorpus(CorpusConfig{});

  struct Criterion {
    int id;
    std::string title;
    double limitSeconds;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "example reproduction", 1.0, exampleReproduction},
      {2, "ideal lattice oracle", 10.0, [&] { return idealLattice(corpus); }},
      {3, "radical agreement", 0.0, [&] { return radicalAgreement(corpus); }},
      {4, "theorem suite", 300.0, [&] { return theoremSuite(corpus); }},
      {5, "implication lattice", 0.0, [&] { return implicationLattice(corpus); }},
      {6, "localization", 0.0, [&] { return localization(corpus); }},
      {7, "parser fuzz", 0.0, parserFuzz},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o = c.check();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limitSeconds > 0 && seconds >= c.limitSeconds) {
      o.passed = false;
      o.detail = "took " + std::to_string(seconds) + " s";
    }
    all = all && o.passed;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << seconds;
    std::cout << "CRITERION " << c.id << " " << (o.passed ? "PASS" : "FAIL") << " "
              << c.title << " (" << time.str() << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
