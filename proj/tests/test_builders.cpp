#include <doctest.h>

#include "krasner/builders.hpp"
#include "oracles.hpp"

using namespace krasner;

TEST_CASE("unit subgroups match a brute-force search") {
  for (int m = 2; m <= 16; ++m) {
    auto expected = oracle::unitSubgroups(m);
    auto got = unitSubgroups(m);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == expected, "modulus " << m);
  }
  CHECK(unitSubgroups(12).size() == 5);
  CHECK(unitSubgroups(9).size() == 4);
}

TEST_CASE("quotients agree with modular arithmetic on orbits") {
  for (int m : {4, 6, 8, 9, 10, 12}) {
    for (const auto& group : unitSubgroups(m)) {
      for (int n : {2, 3}) {
        const HyperringTable a = quotientByUnits({m, group, n});
        const oracle::ModQuotient q{m, group};
        const auto reps = q.reps();
        REQUIRE(a.size() == reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
          CHECK(a.label(static_cast<ElementId>(i)) == std::to_string(reps[i]));
        }
        auto id = [&](int rep) { return *a.find(std::to_string(rep)); };
        for (int x : reps) {
          for (int y : reps) {
            ElementSet expected;
            for (int z : q.add(x, y)) expected.insert(id(z));
            CHECK(a.add(id(x), id(y)) == expected);
          }
        }
        oracle::tuples(reps.size(), static_cast<std::size_t>(n),
                       [&](const std::vector<ElementId>& t) {
                         std::vector<int> xs;
                         for (ElementId e : t) xs.push_back(reps[e]);
                         CHECK(a.g(t) == id(q.mul(xs)));
                       });
        CHECK_MESSAGE(checkAxioms(a).passed(), "Z_" << m << " n=" << n);
      }
    }
  }
}

TEST_CASE("the Z_12 example quotient") {
  const HyperringTable a = quotientByUnits({12, {1, 5, 7, 11}, 3});
  CHECK(a.labels() == std::vector<std::string>{"0", "1", "2", "3", "4", "6"});
  CHECK(a.m() == 2);
  CHECK(a.n() == 3);
  CHECK(checkAxioms(a).passed());
  // 2 + 2 takes both values 4 and 0 (2+10).
  CHECK(formatSet(a, a.add(*a.find("2"), *a.find("2"))) == "{0,4}");
}

TEST_CASE("quotient preconditions") {
  CHECK_THROWS_AS(quotientByUnits({12, {1, 5, 7}, 2}), StructureError);
  CHECK_THROWS_AS(quotientByUnits({12, {1, 2}, 2}), StructureError);
  CHECK_THROWS_AS(quotientByUnits({12, {5, 7, 11}, 2}), StructureError);
  CHECK_THROWS_AS(quotientByUnits({1, {1}, 2}), StructureError);
}

TEST_CASE("chains") {
  for (int k = 2; k <= 5; ++k) {
    for (int n : {2, 3, 4}) {
      const HyperringTable c = chain(k, n);
      CHECK(c.size() == static_cast<std::size_t>(k));
      CHECK(c.label(0) == "e0");
      CHECK(c.zero() == 0);
      CHECK(c.one() == static_cast<ElementId>(k - 1));
      CHECK_MESSAGE(checkAxioms(c).passed(), "chain " << k << " n=" << n);
      oracle::tuples(static_cast<std::size_t>(k), static_cast<std::size_t>(n),
                     [&](const std::vector<ElementId>& t) {
                       int sum = 0;
                       for (ElementId x : t) sum += x;
                       const int v = std::max(0, sum - (n - 1) * (k - 1));
                       CHECK(c.g(t) == static_cast<ElementId>(v));
                     });
      for (ElementId x = 0; x < c.size(); ++x) {
        for (ElementId y = 0; y < c.size(); ++y) {
          ElementSet expected;
          if (x != y) {
            expected.insert(std::max(x, y));
          } else {
            for (ElementId z = 0; z <= x; ++z) expected.insert(z);
          }
          CHECK(c.add(x, y) == expected);
        }
      }
    }
  }
  CHECK_THROWS_AS(chain(1, 2), StructureError);
  const HyperringTable c5 = chain(5, 3);
  CHECK(formatSet(c5, c5.add(2, 2)) == "{e0,e1,e2}");
}

TEST_CASE("products are componentwise") {
  const HyperringTable a = chain(2, 3);
  const HyperringTable b = quotientByUnits({4, {1, 3}, 3});
  const HyperringTable p = product(a, b);
  CHECK(p.size() == a.size() * b.size());
  CHECK(p.label(0) == "(e0,0)");
  CHECK(checkAxioms(p).passed());
  oracle::tuples(p.size(), 3, [&](const std::vector<ElementId>& t) {
    std::vector<ElementId> l;
    std::vector<ElementId> r;
    for (ElementId x : t) {
      l.push_back(x / static_cast<ElementId>(b.size()));
      r.push_back(x % static_cast<ElementId>(b.size()));
    }
    CHECK(p.g(t) == a.g(l) * b.size() + b.g(r));
  });
  CHECK_THROWS_AS(product(chain(2, 2), chain(2, 3)), StructureError);
}

TEST_CASE("product of the Z_12 example with a chain") {
  const HyperringTable p =
      product(quotientByUnits({12, {1, 5, 7, 11}, 3}), chain(2, 3));
  const std::vector<ElementId> t{*p.find("(2,e1)"), *p.find("(2,e1)"),
                                 *p.find("(3,e1)")};
  CHECK(p.label(p.g(t)) == "(0,e1)");
  CHECK(product(chain(2, 3), chain(2, 3)).size() == 4);
}
