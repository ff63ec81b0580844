#include "krasner/builders.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace krasner {

namespace {

int mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

HyperringTable quotientByUnits(const QuotientSpec& spec) {
  const int N = spec.modulus;
  if (N < 2) throw StructureError("modulus must be at least 2");
  if (static_cast<std::size_t>(N) > 4096) {
    throw StructureError("modulus too large");
  }

  std::set<int> group;
  for (int u : spec.unitSubgroup) group.insert(mod(u, N));
  if (!group.count(1)) {
    throw StructureError("unit subgroup must contain 1");
  }
  for (int u : group) {
    if (std::gcd(u, N) != 1) {
      throw StructureError(std::to_string(u) + " is not a unit mod " +
                           std::to_string(N));
    }
  }
  for (int u : group) {
    for (int v : group) {
      if (!group.count(mod(static_cast<long long>(u) * v, N))) {
        throw StructureError("unit subgroup is not closed: " +
                             std::to_string(u) + "*" + std::to_string(v) +
                             " = " + std::to_string(mod(u * v, N)));
      }
    }
  }

  // classOf[x] = index of the orbit of x; reps ascend with the index.
  std::vector<int> classOf(static_cast<std::size_t>(N), -1);
  std::vector<int> reps;
  std::vector<std::vector<int>> members;
  for (int x = 0; x < N; ++x) {
    if (classOf[x] != -1) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    members.emplace_back();
    for (int u : group) {
      const int y = mod(static_cast<long long>(x) * u, N);
      if (classOf[y] == -1) {
        classOf[y] = id;
        members.back().push_back(y);
      }
    }
  }
  if (reps.size() > kMaxCarrier) {
    throw StructureError("quotient has " + std::to_string(reps.size()) +
                         " classes, above the carrier limit");
  }

  // g is defined on representatives; independence of the choice follows
  // from the binary case, which is checked exhaustively.
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      const int expect = classOf[mod(static_cast<long long>(reps[a]) * reps[b], N)];
      for (int x : members[a]) {
        for (int y : members[b]) {
          if (classOf[mod(static_cast<long long>(x) * y, N)] != expect) {
            throw StructureError(
                "multiplication depends on representatives: " +
                std::to_string(x) + "*" + std::to_string(y));
          }
        }
      }
    }
  }

  std::vector<std::string> labels;
  std::vector<ElementId> negation;
  for (int r : reps) {
    labels.push_back(std::to_string(r));
    negation.push_back(static_cast<ElementId>(classOf[mod(-r, N)]));
  }

  return HyperringTable::fromFunctions(
      2, spec.n, std::move(labels), static_cast<ElementId>(classOf[0]),
      static_cast<ElementId>(classOf[1]), std::move(negation),
      [&](std::span<const ElementId> t) {
        ElementSet out;
        for (int x : members[t[0]]) {
          for (int y : members[t[1]]) {
            out.insert(static_cast<ElementId>(classOf[mod(x + y, N)]));
          }
        }
        return out;
      },
      [&](std::span<const ElementId> t) {
        long long p = 1;
        for (ElementId c : t) p = mod(p * reps[c], N);
        return static_cast<ElementId>(classOf[static_cast<std::size_t>(p)]);
      });
}

std::vector<std::vector<int>> unitSubgroups(int modulus) {
  if (modulus < 2) throw StructureError("modulus must be at least 2");
  std::vector<int> units;
  for (int u = 1; u < modulus; ++u) {
    if (std::gcd(u, modulus) == 1) units.push_back(u);
  }
  // Breadth-first: adjoin one unit at a time to every subgroup found so far.
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier{{1}};
  found.insert({1});
  auto close = [&](std::set<int> gens) {
    std::set<int> g{1};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(g.begin(), g.end());
      for (int a : cur) {
        for (int b : gens) {
          const int c = mod(static_cast<long long>(a) * b, modulus);
          if (g.insert(c).second) grew = true;
        }
      }
    }
    return std::vector<int>(g.begin(), g.end());
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int u : units) {
        if (std::binary_search(h.begin(), h.end(), u)) continue;
        std::set<int> gens(h.begin(), h.end());
        gens.insert(u);
        auto sub = close(gens);
        if (found.insert(sub).second) next.push_back(sub);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

HyperringTable chain(int k, int n) {
  if (k < 2) throw StructureError("chain needs at least 2 elements");
  if (static_cast<std::size_t>(k) > kMaxCarrier) {
    throw StructureError("chain length above the carrier limit");
  }
  std::vector<std::string> labels;
  std::vector<ElementId> negation;
  for (int i = 0; i < k; ++i) {
    labels.push_back("e" + std::to_string(i));
    negation.push_back(static_cast<ElementId>(i));
  }
  const long long excess = static_cast<long long>(n - 1) * (k - 1);
  return HyperringTable::fromFunctions(
      2, n, std::move(labels), 0, static_cast<ElementId>(k - 1),
      std::move(negation),
      [](std::span<const ElementId> t) {
        if (t[0] != t[1]) return ElementSet::single(std::max(t[0], t[1]));
        return ElementSet::all(t[0] + 1U);
      },
      [excess](std::span<const ElementId> t) {
        long long sum = 0;
        for (ElementId x : t) sum += x;
        return static_cast<ElementId>(std::max(0LL, sum - excess));
      });
}

HyperringTable product(const HyperringTable& a1, const HyperringTable& a2) {
  if (a1.m() != a2.m() || a1.n() != a2.n()) {
    throw StructureError("arity mismatch: product needs equal (m,n)");
  }
  const std::size_t s2 = a2.size();
  if (a1.size() * s2 > kMaxCarrier) {
    throw StructureError("product carrier above the carrier limit");
  }
  auto pair = [s2](ElementId x, ElementId y) {
    return static_cast<ElementId>(x * s2 + y);
  };
  std::vector<std::string> labels;
  std::vector<ElementId> negation;
  for (ElementId x = 0; x < a1.size(); ++x) {
    for (ElementId y = 0; y < s2; ++y) {
      labels.push_back("(" + a1.label(x) + "," + a2.label(y) + ")");
      negation.push_back(pair(a1.negation(x), a2.negation(y)));
    }
  }
  return HyperringTable::fromFunctions(
      a1.m(), a1.n(), std::move(labels), pair(a1.zero(), a2.zero()),
      pair(a1.one(), a2.one()), std::move(negation),
      [&](std::span<const ElementId> t) {
        std::vector<ElementId> left(t.size());
        std::vector<ElementId> right(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
          left[i] = static_cast<ElementId>(t[i] / s2);
          right[i] = static_cast<ElementId>(t[i] % s2);
        }
        ElementSet out;
        const ElementSet r = a2.f(right);
        for (ElementId x : a1.f(left)) {
          for (ElementId y : r) out.insert(pair(x, y));
        }
        return out;
      },
      [&](std::span<const ElementId> t) {
        std::vector<ElementId> left(t.size());
        std::vector<ElementId> right(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
          left[i] = static_cast<ElementId>(t[i] / s2);
          right[i] = static_cast<ElementId>(t[i] % s2);
        }
        return pair(a1.g(left), a2.g(right));
      });
}

}  // namespace krasner
