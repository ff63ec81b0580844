#include <doctest.h>

#include "krasner/builders.hpp"
#include "krasner/ideals.hpp"
#include "krasner/radical.hpp"
#include "krasner/theorems.hpp"
#include "oracles.hpp"

using namespace krasner;

TEST_CASE("radical of the Z_12 example ideal") {
  const HyperringTable a = quotientByUnits({12, {1, 5, 7, 11}, 3});
  ElementSet q{*a.find("0"), *a.find("4")};
  CHECK(formatSet(a, radicalByPrimes(a, q).members) == "{0,2,4,6}");
  const RadicalResult byPowers = radicalByPowers(a, q);
  CHECK(formatSet(a, byPowers.members) == "{0,2,4,6}");
  CHECK(byPowers.exponent.at(*a.find("2")) == 2);
  CHECK(byPowers.exponent.at(*a.find("6")) == 2);
  CHECK(byPowers.exponent.at(*a.find("4")) == 1);
  CHECK(formatSet(a, radicalByRestrictedPowers(a, q)) == "{0,2,4,6}");
}

TEST_CASE("primes match the ordered-tuple scan") {
  const Corpus corpus = buildCorpus({12, 4, true});
  for (const auto& c : corpus.structures) {
    const HyperringTable& a = c.table();
    std::vector<ElementSet> expected;
    for (ElementSet q : oracle::ideals(a)) {
      if (oracle::isPrime(a, q)) expected.push_back(q);
    }
    std::sort(expected.begin(), expected.end(), canonicalLess);
    CHECK_MESSAGE(enumeratePrimes(a) == expected, c.name);
  }
}

TEST_CASE("all radical algorithms agree with the oracle") {
  const Corpus corpus = buildCorpus({16, 4, true});
  for (const auto& c : corpus.structures) {
    const HyperringTable& a = c.table();
    const auto lattice = enumerateHyperideals(a);
    for (ElementSet q : lattice) {
      const ElementSet expected = oracle::radical(a, q, lattice);
      CHECK_MESSAGE(radicalByPrimes(a, q).members == expected,
                    c.name << " Q=" << formatSet(a, q));
      CHECK_MESSAGE(radicalByPowers(a, q).members == expected,
                    c.name << " Q=" << formatSet(a, q));
      CHECK_MESSAGE(radicalByRestrictedPowers(a, q) == expected,
                    c.name << " Q=" << formatSet(a, q));
    }
  }
}

TEST_CASE("power exponents are least") {
  const HyperringTable a = quotientByUnits({8, {1}, 2});
  const ElementSet zero{a.zero()};
  const RadicalResult r = radicalByPowers(a, zero);
  CHECK(formatSet(a, r.members) == "{0,2,4,6}");
  for (const auto& [x, k] : r.exponent) {
    CHECK(zero.contains(oracle::power(a, x, static_cast<int>(k))));
    if (k > 1) {
      CHECK_FALSE(zero.contains(oracle::power(a, x, static_cast<int>(k) - 1)));
    }
  }
  CHECK(r.exponent.at(2) == 3);
  CHECK(r.exponent.at(4) == 2);
}

TEST_CASE("radicals are hyperideals containing Q and idempotent") {
  const HyperringTable a = chain(5, 3);
  for (ElementSet q : enumerateHyperideals(a)) {
    const ElementSet r = radicalByPowers(a, q).members;
    CHECK(q.isSubsetOf(r));
    CHECK(oracle::isIdeal(a, r));
    CHECK(radicalByPowers(a, r).members == r);
  }
}

TEST_CASE("prime counterexamples") {
  const HyperringTable a = quotientByUnits({12, {1, 5, 7, 11}, 3});
  const ElementSet q{*a.find("0"), *a.find("4")};
  const auto ce = primeCounterexample(a, q);
  REQUIRE(ce);
  CHECK(q.contains(a.g(*ce)));
  for (ElementId x : *ce) CHECK_FALSE(q.contains(x));
  CHECK_FALSE(primeCounterexample(a, ElementSet{*a.find("0"), *a.find("2"),
                                                *a.find("4"), *a.find("6")}));
}
