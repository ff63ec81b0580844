#include <doctest.h>

#include <set>

#include "krasner/builders.hpp"
#include "krasner/hyperring.hpp"
#include "krasner/multiset.hpp"
#include "oracles.hpp"

using namespace krasner;

namespace {

// The ring Z_k as a (2,2)-hyperring with singleton sums.
HyperringTable ringZ(int k) {
  std::vector<std::string> labels;
  std::vector<ElementId> neg;
  for (int i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    neg.push_back(static_cast<ElementId>((k - i) % k));
  }
  return HyperringTable::fromFunctions(
      2, 2, labels, 0, 1, neg,
      [k](std::span<const ElementId> t) {
        return ElementSet::single(static_cast<ElementId>((t[0] + t[1]) % k));
      },
      [k](std::span<const ElementId> t) {
        return static_cast<ElementId>(t[0] * t[1] % k);
      });
}

}  // namespace

TEST_CASE("element sets behave like bitsets") {
  ElementSet s{1, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.first() == 1);
  CHECK((s & ElementSet{3, 4}) == ElementSet{3});
  CHECK((s | ElementSet{0}) == ElementSet{0, 1, 3, 5});
  CHECK((s - ElementSet{1}) == ElementSet{3, 5});
  CHECK(ElementSet{3}.isSubsetOf(s));
  CHECK_FALSE(s.intersects(ElementSet{0, 2}));
  CHECK(s.toVector() == std::vector<ElementId>{1, 3, 5});
  CHECK(ElementSet::all(4) == ElementSet{0, 1, 2, 3});
}

TEST_CASE("multiset ranks are a bijection onto 0..count-1") {
  for (std::size_t size : {1U, 3U, 6U}) {
    for (int k : {1, 2, 3, 4}) {
      std::set<std::uint64_t> ranks;
      std::uint64_t visited = 0;
      forEachMultiset(size, k, [&](std::span<const ElementId> t) {
        CHECK(std::is_sorted(t.begin(), t.end()));
        ranks.insert(multisetRank(t));
        ++visited;
        return true;
      });
      CHECK(visited == multisetCount(size, k));
      CHECK(ranks.size() == visited);
      CHECK(*ranks.rbegin() == visited - 1);
    }
  }
}

TEST_CASE("tables are commutative by construction") {
  const HyperringTable a = quotientByUnits({12, {1, 5, 7, 11}, 3});
  oracle::tuples(a.size(), 3, [&](const std::vector<ElementId>& t) {
    std::vector<ElementId> r(t.rbegin(), t.rend());
    CHECK(a.g(t) == a.g(r));
  });
  oracle::tuples(a.size(), 2, [&](const std::vector<ElementId>& t) {
    CHECK(a.f(t) == a.f(std::vector<ElementId>{t[1], t[0]}));
    CHECK(a.add(t[0], t[1]) == a.f(t));
  });
}

TEST_CASE("rings are hyperrings") {
  for (int k : {2, 3, 4, 6}) {
    const HyperringTable z = ringZ(k);
    CHECK(checkAxioms(z).passed());
    CHECK(z.size() == static_cast<std::size_t>(k));
  }
}

TEST_CASE("axiom checker names the broken axiom") {
  SUBCASE("g not distributive") {
    const HyperringTable bad = HyperringTable::fromFunctions(
        2, 2, {"0", "1", "2"}, 0, 1, {0, 2, 1},
        [](std::span<const ElementId> t) {
          return ElementSet::single(static_cast<ElementId>((t[0] + t[1]) % 3));
        },
        [](std::span<const ElementId> t) {
          return static_cast<ElementId>(t[0] == 0 || t[1] == 0 ? 0
                                                               : std::max(t[0], t[1]));
        });
    const AxiomReport r = checkAxioms(bad);
    CHECK_FALSE(r.passed());
    CHECK(r.find("distributivity") != nullptr);
  }
  SUBCASE("declared negation disagrees with f") {
    const HyperringTable bad = HyperringTable::fromFunctions(
        2, 2, {"0", "1", "2"}, 0, 1, {0, 1, 2},
        [](std::span<const ElementId> t) {
          return ElementSet::single(static_cast<ElementId>((t[0] + t[1]) % 3));
        },
        [](std::span<const ElementId> t) {
          return static_cast<ElementId>(t[0] * t[1] % 3);
        });
    CHECK(checkAxioms(bad).find("inverse") != nullptr);
  }
}

TEST_CASE("fromTables round-trips through toRaw") {
  for (const HyperringTable& a :
       {quotientByUnits({9, {1, 8}, 3}), chain(4, 2), product(chain(2, 2), chain(3, 2))}) {
    CHECK(fromTables(a.toRaw()) == a);
  }
}

TEST_CASE("fromTables reports malformed input") {
  RawTables raw = ringZ(2).toRaw();
  SUBCASE("missing entry") {
    raw.g.pop_back();
    CHECK_THROWS_AS(fromTables(raw), StructureError);
  }
  SUBCASE("empty value") {
    raw.f[0].second = ElementSet{};
    CHECK_THROWS_AS(fromTables(raw), StructureError);
  }
  SUBCASE("disagreeing permutations") {
    raw.g.push_back({{1, 0}, 1});
    CHECK_THROWS_AS(fromTables(raw), StructureError);
  }
  SUBCASE("arity mismatch") {
    raw.g[0].first.push_back(0);
    CHECK_THROWS_AS(fromTables(raw), StructureError);
  }
  SUBCASE("unknown element") {
    raw.g[0].second = 7;
    CHECK_THROWS_AS(fromTables(raw), StructureError);
  }
}

TEST_CASE("derived negation is the additive inverse") {
  RawTables raw = ringZ(5).toRaw();
  raw.negation.reset();
  const HyperringTable z = fromTables(raw);
  for (ElementId x = 0; x < 5; ++x) CHECK(z.negation(x) == (5 - x) % 5);
}

TEST_CASE("power folds g with the identity") {
  const HyperringTable a = quotientByUnits({12, {1}, 3});
  for (ElementId x = 0; x < a.size(); ++x) {
    for (unsigned k = 1; k <= 6; ++k) {
      CHECK(power(a, x, k) == oracle::power(a, x, static_cast<int>(k)));
    }
  }
  CHECK_THROWS_AS(power(a, 1, 0), PreconditionError);
}

TEST_CASE("iterated g equals nested binary products") {
  const HyperringTable a = quotientByUnits({8, {1}, 3});
  // l = 2 consumes 5 arguments.
  const std::vector<ElementId> t{2, 3, 5, 7, 1};
  const ElementId inner = a.g(std::vector<ElementId>{2, 3, 5});
  CHECK(evalGIterated(a, 2, t) == a.g(std::vector<ElementId>{inner, 7, 1}));
}

TEST_CASE("set-valued evaluation takes unions over choices") {
  const HyperringTable a = quotientByUnits({12, {1, 5, 7, 11}, 2});
  const ElementId two = *a.find("2");
  const ElementId three = *a.find("3");
  const ElementSet sums = evalFOnSets(a, std::vector<ElementSet>{
                                             ElementSet{two}, ElementSet{three}});
  CHECK(sums == a.add(two, three));
  const ElementSet prods = evalGOnSets(
      a, std::vector<ElementSet>{ElementSet{two, three}, ElementSet{two}});
  CHECK(prods == ElementSet{a.mul(two, two), a.mul(three, two)});
}

TEST_CASE("formatting uses labels") {
  const HyperringTable a = chain(3, 2);
  CHECK(formatSet(a, ElementSet{0, 2}) == "{e0,e2}");
  CHECK(formatTuple(a, std::vector<ElementId>{1, 2}) == "(e1,e2)");
}

TEST_CASE("carrier and arity limits are enforced") {
  auto f = [](std::span<const ElementId>) { return ElementSet::single(0); };
  auto g = [](std::span<const ElementId>) { return ElementId{0}; };
  CHECK_THROWS_AS(HyperringTable::fromFunctions(1, 2, {"0"}, 0, 0, {0}, f, g),
                  StructureError);
  CHECK_THROWS_AS(HyperringTable::fromFunctions(2, 9, {"0"}, 0, 0, {0}, f, g),
                  StructureError);
  CHECK_THROWS_AS(
      HyperringTable::fromFunctions(2, 2, {"a", "a"}, 0, 0, {0, 1}, f, g),
      StructureError);
}
