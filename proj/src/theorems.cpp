#include "krasner/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "krasner/builders.hpp"
#include "krasner/fractions.hpp"
#include "krasner/ideals.hpp"
#include "krasner/morphisms.hpp"

namespace krasner {

namespace {

constexpr std::size_t kStoredCounterexamples = 5;

std::string intSet(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

}  // namespace

std::size_t Corpus::add(std::string name, const HyperringTable& table) {
  if (config.maxSize == 0) throw PreconditionError("corpus size cap is zero");
  if (table.size() > config.maxSize) {
    throw PreconditionError(name + " has " + std::to_string(table.size()) +
                            " elements, above the cap of " +
                            std::to_string(config.maxSize));
  }
  if (const auto report = checkAxioms(table); !report.passed()) {
    throw StructureError(name + " fails the " + report.violations[0].axiom +
                         " axiom: " + report.violations[0].explanation);
  }
  CorpusStructure entry;
  entry.name = std::move(name);
  entry.analyzer = std::make_shared<const Analyzer>(table);
  entry.mulsets = enumerateMulSets(table, config.maxMulSetSize);
  structures.push_back(std::move(entry));
  return structures.size() - 1;
}

void Corpus::addHom(std::string name, std::size_t source, std::size_t target,
                    std::vector<ElementId> map) {
  const Homomorphism h{structures.at(source).table(),
                       structures.at(target).table(), map};
  if (const auto check = checkHomomorphism(h); !check) {
    throw StructureError(name + " is not a homomorphism: " + check.explanation);
  }
  if (!h.injective()) throw StructureError(name + " is not injective");
  homs.push_back({std::move(name), source, target, std::move(map)});
}

Corpus buildCorpus(const CorpusConfig& config) {
  if (config.maxSize == 0) throw PreconditionError("corpus size cap is zero");
  Corpus corpus;
  corpus.config = config;
  if (!config.includeDefaults) return corpus;

  auto tryAdd = [&](const std::string& name,
                    const HyperringTable& t) -> std::optional<std::size_t> {
    if (t.size() > config.maxSize) return std::nullopt;
    return corpus.add(name, t);
  };

  for (int n : {2, 3}) {
    const std::string arity = ",n=" + std::to_string(n) + ")";
    std::optional<std::size_t> ring4;
    std::optional<std::size_t> zh12;
    for (int modulus : {4, 6, 8, 9, 12}) {
      for (const auto& group : unitSubgroups(modulus)) {
        const auto idx = tryAdd(
            "quotient_zn(" + std::to_string(modulus) + "," + intSet(group) + arity,
            quotientByUnits({modulus, group, n}));
        if (modulus == 4 && group.size() == 1) ring4 = idx;
        if (modulus == 12 && group.size() == 4) zh12 = idx;
      }
    }
    std::optional<std::size_t> chain2;
    for (int k = 2; k <= 5; ++k) {
      const auto idx =
          tryAdd("chain(" + std::to_string(k) + arity, chain(k, n));
      if (k == 2) chain2 = idx;
    }
    const auto z4u = tryAdd("quotient_zn(4,{1,3}" + arity,
                            quotientByUnits({4, {1, 3}, n}));
    // z4u duplicates an earlier member; the copy keeps indices simple.
    if (!chain2 || !z4u) continue;

    auto addProduct = [&](std::vector<std::size_t> factors) {
      HyperringTable t = corpus.structures[factors[0]].table();
      std::string name = corpus.structures[factors[0]].name;
      for (std::size_t i = 1; i < factors.size(); ++i) {
        t = product(t, corpus.structures[factors[i]].table());
        name = "product(" + name + "," + corpus.structures[factors[i]].name + ")";
      }
      const auto idx = tryAdd(name, t);
      if (idx) corpus.products.push_back({std::move(factors), *idx});
      return idx;
    };
    const auto ab = addProduct({*chain2, *z4u});
    const auto ba = addProduct({*z4u, *chain2});
    addProduct({*chain2, *chain2});
    addProduct({*z4u, *z4u});
    addProduct({*chain2, *chain2, *chain2});
    addProduct({*chain2, *chain2, *z4u});
    addProduct({*z4u, *chain2, *chain2});
    if (zh12) addProduct({*zh12, *chain2});
    if (ab && ba) {
      const auto sa = static_cast<ElementId>(corpus.structures[*chain2].table().size());
      const auto sb = static_cast<ElementId>(corpus.structures[*z4u].table().size());
      std::vector<ElementId> map;
      for (ElementId x = 0; x < sa; ++x) {
        for (ElementId y = 0; y < sb; ++y) map.push_back(y * sa + x);
      }
      corpus.addHom("swap(" + corpus.structures[*ab].name + ")", *ab, *ba,
                    std::move(map));
    }
    if (ring4) {
      if (const auto sq = addProduct({*ring4, *ring4})) {
        const Homomorphism d = diagonalMap(corpus.structures[*ring4].table());
        corpus.addHom("diagonal(" + corpus.structures[*ring4].name + ")",
                      *ring4, *sq, d.map);
      }
    }
  }

  // Proper subhyperrings of every member become inclusion embeddings.
  const std::size_t base = corpus.structures.size();
  for (std::size_t i = 0; i < base; ++i) {
    const HyperringTable& t = corpus.structures[i].table();
    for (ElementSet sub : enumerateSubhyperrings(t)) {
      const std::string name =
          "sub(" + corpus.structures[i].name + "," + formatSet(t, sub) + ")";
      const auto idx = tryAdd(name, restrictTo(t, sub));
      if (idx) corpus.addHom("inclusion" + name.substr(3), *idx, i, sub.toVector());
    }
  }
  return corpus;
}

bool PropertyResult::passed() const {
  if (negativeControl) return counterexampleCount > 0;
  return instances > 0 && counterexampleCount == 0;
}

namespace {

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "P1", "P2-setwise", "P2-ideal", "P3",  "P4",        "P5",
      "P6", "P7",         "P8",       "P9",  "P10",       "P10-kfold",
      "P11", "P12",       "P13",      "N1",  "N3"};
  return kNames;
}

/// Memoized predicate verdicts, keyed by analyzer identity.
class Verdicts {
 public:
  const PredicateVerdict& get(const Analyzer& an, Predicate p, ElementSet q,
                              ElementSet s) {
    const Key key{&an, static_cast<int>(p), q.bits(), s.bits()};
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, an.evaluate(p, q, s)).first;
    return it->second;
  }
  bool holds(const Analyzer& an, Predicate p, ElementSet q, ElementSet s) {
    return get(an, p, q, s).holds;
  }

 private:
  using Key = std::tuple<const Analyzer*, int, std::uint64_t, std::uint64_t>;
  std::map<Key, PredicateVerdict> cache_;
};

class Suite {
 public:
  explicit Suite(const Corpus& corpus) : corpus_(corpus) {}

  PropertyResult run(const std::string& name) {
    PropertyResult r;
    r.name = name;
    current_ = &r;
    if (name == "P1") p1(false);
    else if (name == "N1") p1(true);
    else if (name == "P2-setwise") p2(false);
    else if (name == "P2-ideal") p2(true);
    else if (name == "P3") p3(false);
    else if (name == "N3") p3(true);
    else if (name == "P4") p4();
    else if (name == "P5") p5();
    else if (name == "P6") p6();
    else if (name == "P7") p7();
    else if (name == "P8") p8();
    else if (name == "P9") p9();
    else if (name == "P10") p10(false);
    else if (name == "P10-kfold") p10(true);
    else if (name == "P11") p11();
    else if (name == "P12") p12();
    else if (name == "P13") p13();
    if (r.negativeControl) {
      if (r.counterexampleCount == 0) {
        r.note = "control found no counterexample: corpus too small";
      }
    } else if (r.instances == 0) {
      r.note = "hypothesis never satisfiable; extend corpus";
    }
    current_ = nullptr;
    return r;
  }

 private:
  using Values = std::vector<std::pair<std::string, std::string>>;

  void instance() { ++current_->instances; }
  void skip(const std::string& reason) {
    ++current_->skipped;
    current_->skipReason = reason;
  }
  void counterexample(Values values, std::string note = {}) {
    ++current_->counterexampleCount;
    if (current_->counterexamples.size() < kStoredCounterexamples) {
      current_->counterexamples.push_back({std::move(values), std::move(note)});
    }
  }

  static std::string set(const CorpusStructure& c, ElementSet x) {
    return formatSet(c.table(), x);
  }
  bool weakly(const Analyzer& an, ElementSet q, ElementSet s) {
    return verdicts_.holds(an, Predicate::WeaklySPrimary, q, s);
  }

  // Q weakly S-primary, P meets S => Q cap P weakly S-primary.
  void p1(bool control) {
    current_->statement =
        control ? "Q weakly S-primary => Q cap P weakly S-primary (P cap S "
                  "nonempty dropped)"
                : "Q weakly S-primary and P cap S nonempty => Q cap P weakly "
                  "S-primary";
    current_->negativeControl = control;
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      for (ElementSet s : c.mulsets) {
        for (ElementSet q : an.ideals()) {
          if (q.intersects(s) || !weakly(an, q, s)) continue;
          for (ElementSet p : an.ideals()) {
            if (!control && !p.intersects(s)) continue;
            instance();
            const ElementSet meet = q & p;
            if (!weakly(an, meet, s)) {
              counterexample({{"structure", c.name},
                              {"S", set(c, s)},
                              {"Q", set(c, q)},
                              {"P", set(c, p)},
                              {"Q cap P", set(c, meet)}});
            }
          }
        }
      }
    }
  }

  // g(Q_1, ..., Q_{n-1}, Q) weakly S-primary when each Q_j meets S.
  void p2(bool closed) {
    current_->statement =
        closed ? "Q weakly S-primary, Q_j cap S nonempty => hyperideal "
                 "generated by g(Q_1..Q_{n-1},Q) weakly S-primary"
               : "Q weakly S-primary, Q_j cap S nonempty => setwise "
                 "g(Q_1..Q_{n-1},Q) weakly S-primary";
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      const HyperringTable& a = c.table();
      for (ElementSet s : c.mulsets) {
        std::vector<ElementId> meeting;
        for (std::size_t i = 0; i < an.ideals().size(); ++i) {
          if (an.ideals()[i].intersects(s)) meeting.push_back(static_cast<ElementId>(i));
        }
        for (ElementSet q : an.ideals()) {
          if (q.intersects(s) || !weakly(an, q, s)) continue;
          forEachMultisetOf(std::span<const ElementId>(meeting), a.n() - 1,
                            [&](std::span<const ElementId> js) {
            std::vector<ElementSet> sets;
            for (ElementId j : js) sets.push_back(an.ideals()[j]);
            sets.push_back(q);
            ElementSet prod = setProduct(a, sets);
            if (closed) {
              prod = generateHyperideal(a, prod);
            } else if (!an.isIdeal(prod)) {
              skip("setwise product is not a hyperideal");
              return true;
            }
            if (prod.intersects(s)) {
              skip("product meets S");
              return true;
            }
            instance();
            if (!weakly(an, prod, s)) {
              Values v{{"structure", c.name}, {"S", set(c, s)}, {"Q", set(c, q)}};
              for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
                v.push_back({"Q" + std::to_string(i + 1), set(c, sets[i])});
              }
              v.push_back({"product", set(c, prod)});
              counterexample(std::move(v));
            }
            return true;
          });
        }
      }
    }
  }

  // Intersection of n weakly S-primary hyperideals with equal radicals.
  void p3(bool control) {
    current_->negativeControl = control;
    current_->statement =
        control ? "Q_j weakly S-primary => cap Q_j weakly S-primary (equal "
                  "radicals dropped)"
                : "Q_j weakly S-primary with equal radicals => cap Q_j weakly "
                  "S-primary";
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      const int n = c.table().n();
      for (ElementSet s : c.mulsets) {
        std::vector<ElementId> good;
        for (std::size_t i = 0; i < an.ideals().size(); ++i) {
          const ElementSet q = an.ideals()[i];
          if (!q.intersects(s) && weakly(an, q, s)) {
            good.push_back(static_cast<ElementId>(i));
          }
        }
        forEachMultisetOf(std::span<const ElementId>(good), n,
                          [&](std::span<const ElementId> js) {
          const ElementSet rad0 = an.radical(an.ideals()[js[0]]);
          ElementSet meet = c.table().carrier();
          bool equal = true;
          for (ElementId j : js) {
            meet &= an.ideals()[j];
            equal = equal && an.radical(an.ideals()[j]) == rad0;
          }
          if (!control && !equal) return true;
          instance();
          if (!weakly(an, meet, s)) {
            Values v{{"structure", c.name}, {"S", set(c, s)}};
            for (std::size_t i = 0; i < js.size(); ++i) {
              v.push_back({"Q" + std::to_string(i + 1), set(c, an.ideals()[js[i]])});
            }
            v.push_back({"intersection", set(c, meet)});
            counterexample(std::move(v));
          }
          return true;
        });
      }
    }
  }

  // S subset of T with g(t^(n-1), t') in S: weakly T-primary => weakly S-primary.
  void p4() {
    current_->statement =
        "S subset T, every t has t' with g(t^(n-1),t') in S, Q weakly "
        "T-primary => Q weakly S-primary";
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      const HyperringTable& a = c.table();
      std::vector<ElementId> buf(static_cast<std::size_t>(a.n()));
      for (ElementSet t : c.mulsets) {
        for (ElementSet s : c.mulsets) {
          if (!s.isSubsetOf(t)) continue;
          bool linked = true;
          for (ElementId x : t) {
            bool found = false;
            for (ElementId y : t) {
              std::fill(buf.begin(), buf.end() - 1, x);
              buf.back() = y;
              if (s.contains(a.g(buf))) {
                found = true;
                break;
              }
            }
            linked = linked && found;
          }
          if (!linked) continue;
          for (ElementSet q : an.ideals()) {
            if (q.intersects(t) || !weakly(an, q, t)) continue;
            instance();
            if (!weakly(an, q, s)) {
              counterexample({{"structure", c.name},
                              {"S", set(c, s)},
                              {"T", set(c, t)},
                              {"Q", set(c, q)}});
            }
          }
        }
      }
    }
  }

  // (Q:s) weakly primary for some s in S => Q weakly S-primary.
  void p5() {
    current_->statement =
        "(Q:s) weakly primary for some s in S => Q weakly S-primary";
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      const HyperringTable& a = c.table();
      const ElementSet one = ElementSet::single(a.one());
      for (ElementSet s : c.mulsets) {
        for (ElementSet q : an.ideals()) {
          if (q.intersects(s)) continue;
          for (ElementId x : s) {
            const ElementSet col = colon(a, q, x);
            if (col.intersects(one) || !weakly(an, col, one)) continue;
            instance();
            if (!weakly(an, q, s)) {
              counterexample({{"structure", c.name},
                              {"S", set(c, s)},
                              {"Q", set(c, q)},
                              {"s", a.label(x)},
                              {"(Q:s)", set(c, col)}});
            }
          }
        }
      }
    }
  }

  // {0} S-primary and Q weakly S-primary => rad(Q) S-prime.
  void p6() {
    current_->statement =
        "{0} S-primary and Q weakly S-primary => rad(Q) S-prime";
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      const ElementSet zero = ElementSet::single(c.table().zero());
      for (ElementSet s : c.mulsets) {
        if (!verdicts_.holds(an, Predicate::SPrimary, zero, s)) continue;
        for (ElementSet q : an.ideals()) {
          if (q.intersects(s) || !weakly(an, q, s)) continue;
          instance();
          const ElementSet rad = an.radical(q);
          if (rad.intersects(s)) {
            counterexample({{"structure", c.name},
                            {"S", set(c, s)},
                            {"Q", set(c, q)},
                            {"rad(Q)", set(c, rad)}},
                           "rad(Q) meets S");
          } else if (!verdicts_.holds(an, Predicate::SPrime, rad, s)) {
            counterexample({{"structure", c.name},
                            {"S", set(c, s)},
                            {"Q", set(c, q)},
                            {"rad(Q)", set(c, rad)}});
          }
        }
      }
    }
  }

  // 1 in S: weakly S-primary <=> weakly S'-primary.
  void p7() {
    current_->statement =
        "1 in S: Q weakly S-primary <=> Q weakly S'-primary, S' the saturation";
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      const HyperringTable& a = c.table();
      for (ElementSet s : c.mulsets) {
        if (!s.contains(a.one())) continue;
        const Localized& l = localized(c, s);
        if (!l.fs) continue;
        const ElementSet sat = saturate(*l.fs);
        for (ElementSet q : an.ideals()) {
          if (q.intersects(s)) continue;
          instance();
          Values v{{"structure", c.name},
                   {"S", set(c, s)},
                   {"S'", set(c, sat)},
                   {"Q", set(c, q)}};
          if (q.intersects(sat)) {
            counterexample(std::move(v), "S' meets Q");
            continue;
          }
          if (weakly(an, q, s) != weakly(an, q, sat)) {
            counterexample(std::move(v));
          }
        }
      }
    }
  }

  struct Localized {
    std::optional<FractionStructure> fs;
    std::shared_ptr<const Analyzer> analyzer;
    std::string error;
  };

  const Localized& localized(const CorpusStructure& c, ElementSet s) {
    const auto key = std::make_pair(&c, s.bits());
    auto it = localized_.find(key);
    if (it != localized_.end()) return it->second;
    Localized l;
    try {
      l.fs = localize(c.table(), s);
      l.analyzer = std::make_shared<const Analyzer>(l.fs->localized);
    } catch (const Error& e) {
      l.error = e.what();
    }
    return localized_.emplace(key, std::move(l)).first->second;
  }

  // Localization theorem, parts (i) and (ii).
  void p8() {
    current_->statement =
        "S1 subset S2, 1 in S1, Q weakly S1-primary: (i) S2^-1 Q weakly "
        "S2^-1 S1-primary; (ii) S2^-1 Q cap A = (Q:s) cup 0_S2 for some s in S1";
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      const HyperringTable& a = c.table();
      for (ElementSet s2 : c.mulsets) {
        for (ElementSet s1 : c.mulsets) {
          if (!s1.contains(a.one()) || !s1.isSubsetOf(s2)) continue;
          for (ElementSet q : an.ideals()) {
            if (q.intersects(s2) || !weakly(an, q, s1)) continue;
            instance();
            Values v{{"structure", c.name},
                     {"S1", set(c, s1)},
                     {"S2", set(c, s2)},
                     {"Q", set(c, q)}};
            const Localized& l = localized(c, s2);
            if (!l.fs) {
              counterexample(std::move(v), "reconstruction mismatch: " + l.error);
              continue;
            }
            const FractionStructure& fs = *l.fs;
            const ElementSet ext = extend(fs, q);
            const ElementSet image = imageMulSet(fs, s1);
            v.push_back({"S2^-1 Q", formatSet(fs.localized, ext)});
            v.push_back({"S2^-1 S1", formatSet(fs.localized, image)});
            if (ext.intersects(image)) {
              counterexample(std::move(v),
                             "reconstruction mismatch: S2^-1 Q meets S2^-1 S1");
              continue;
            }
            if (!verdicts_.holds(*l.analyzer, Predicate::WeaklySPrimary, ext,
                                 image)) {
              counterexample(std::move(v), "reconstruction mismatch: part (i)");
              continue;
            }
            const ElementSet contracted = contract(fs, ext);
            bool found = false;
            for (ElementId x : s1) {
              if (contracted == (colon(a, q, x) | fs.zeroKernel)) {
                found = true;
                break;
              }
            }
            if (!found) {
              v.push_back({"S2^-1 Q cap A", set(c, contracted)});
              v.push_back({"0_S2", set(c, fs.zeroKernel)});
              counterexample(std::move(v), "reconstruction mismatch: part (ii)");
            }
          }
        }
      }
    }
  }

  // Monomorphism pullback.
  void p9() {
    current_->statement =
        "psi injective, 0 not in psi(S), Q2 weakly psi(S)-primary => "
        "psi^-1(Q2) weakly S-primary";
    for (const auto& h : corpus_.homs) {
      const CorpusStructure& src = corpus_.structures[h.source];
      const CorpusStructure& dst = corpus_.structures[h.target];
      const Homomorphism hom{src.table(), dst.table(), h.map};
      for (ElementSet s : src.mulsets) {
        const ElementSet image = hom.image(s);
        if (image.contains(dst.table().zero())) continue;
        for (ElementSet q2 : dst.analyzer->ideals()) {
          if (q2.intersects(image) || !weakly(*dst.analyzer, q2, image)) continue;
          instance();
          const ElementSet pre = preimage(hom, q2);
          Values v{{"homomorphism", h.name},
                   {"S", set(src, s)},
                   {"Q2", set(dst, q2)},
                   {"preimage", set(src, pre)}};
          if (!src.analyzer->isIdeal(pre)) {
            counterexample(std::move(v), "preimage is not a hyperideal");
          } else if (!weakly(*src.analyzer, pre, s)) {
            counterexample(std::move(v));
          }
        }
      }
    }
  }

  // Cartesian products: (i) weakly S-primary, (ii) factor criterion,
  // (iii) S-primary, all equivalent for nonzero factor hyperideals.
  void p10(bool kfold) {
    current_->statement =
        kfold ? "Q_1 x ... x Q_k weakly S-primary <=> some Q_j S_j-primary "
                "and S_h meets Q_h for h != j"
              : "Q1 x Q2: weakly S1xS2-primary <=> (Q1 S1-primary and S2 "
                "meets Q2, or symmetric) <=> S1xS2-primary";
    for (const auto& p : corpus_.products) {
      if ((p.factors.size() > 2) != kfold) continue;
      const CorpusStructure& prod = corpus_.structures[p.product];
      std::vector<const CorpusStructure*> fac;
      for (std::size_t f : p.factors) fac.push_back(&corpus_.structures[f]);
      const std::size_t k = fac.size();

      std::vector<std::vector<ElementSet>> nonzero(k);
      for (std::size_t i = 0; i < k; ++i) {
        const ElementSet zero = ElementSet::single(fac[i]->table().zero());
        for (ElementSet q : fac[i]->analyzer->ideals()) {
          if (q != zero) nonzero[i].push_back(q);
        }
      }
      std::vector<std::size_t> qi(k, 0);
      std::vector<std::size_t> si(k, 0);
      // Odometer over (Q_1..Q_k, S_1..S_k).
      std::function<void(std::size_t)> loop = [&](std::size_t depth) {
        if (depth == 2 * k) {
          check(prod, fac, nonzero, qi, si);
          return;
        }
        const std::size_t i = depth % k;
        const std::size_t limit =
            depth < k ? nonzero[i].size() : fac[i]->mulsets.size();
        for (std::size_t j = 0; j < limit; ++j) {
          (depth < k ? qi : si)[i] = j;
          loop(depth + 1);
        }
      };
      loop(0);
    }
  }

  void check(const CorpusStructure& prod,
             const std::vector<const CorpusStructure*>& fac,
             const std::vector<std::vector<ElementSet>>& nonzero,
             const std::vector<std::size_t>& qi,
             const std::vector<std::size_t>& si) {
    const std::size_t k = fac.size();
    std::vector<ElementSet> qs(k);
    std::vector<ElementSet> ss(k);
    for (std::size_t i = 0; i < k; ++i) {
      qs[i] = nonzero[i][qi[i]];
      ss[i] = fac[i]->mulsets[si[i]];
    }
    const ElementSet q = boxProduct(fac, qs);
    const ElementSet s = boxProduct(fac, ss);
    if (q.intersects(s)) return;
    instance();
    const bool weak = weakly(*prod.analyzer, q, s);
    const bool strong = verdicts_.holds(*prod.analyzer, Predicate::SPrimary, q, s);
    bool factor = false;
    for (std::size_t j = 0; j < k && !factor; ++j) {
      bool others = true;
      for (std::size_t h = 0; h < k; ++h) {
        if (h != j) others = others && ss[h].intersects(qs[h]);
      }
      factor = others && !qs[j].intersects(ss[j]) &&
               verdicts_.holds(*fac[j]->analyzer, Predicate::SPrimary, qs[j],
                               ss[j]);
    }
    if (weak == factor && factor == strong) return;
    Values v{{"structure", prod.name}};
    for (std::size_t i = 0; i < k; ++i) {
      v.push_back({"Q" + std::to_string(i + 1), set(*fac[i], qs[i])});
      v.push_back({"S" + std::to_string(i + 1), set(*fac[i], ss[i])});
    }
    v.push_back({"(i) weakly", weak ? "true" : "false"});
    v.push_back({"(ii) factors", factor ? "true" : "false"});
    v.push_back({"(iii) S-primary", strong ? "true" : "false"});
    counterexample(std::move(v));
  }

  static ElementSet boxProduct(const std::vector<const CorpusStructure*>& fac,
                               const std::vector<ElementSet>& parts) {
    std::vector<ElementId> acc{0};
    for (std::size_t i = 0; i < fac.size(); ++i) {
      const auto size = static_cast<ElementId>(fac[i]->table().size());
      std::vector<ElementId> next;
      for (ElementId prefix : acc) {
        for (ElementId x : parts[i]) next.push_back(prefix * size + x);
      }
      acc = std::move(next);
    }
    return ElementSet::of(acc);
  }

  /// Calls fn(structure, S, Q, witness) for each strongly weakly S-primary Q.
  template <typename Fn>
  void forStronglyWeakly(Fn&& fn) {
    for (const auto& c : corpus_.structures) {
      const Analyzer& an = *c.analyzer;
      for (ElementSet s : c.mulsets) {
        for (ElementSet q : an.ideals()) {
          if (q.intersects(s)) continue;
          const auto& v =
              verdicts_.get(an, Predicate::StronglyWeaklySPrimary, q, s);
          if (v.holds) fn(c, s, q, *v.witness);
        }
      }
    }
  }

  // Annihilation: for a strongly weakly witness s and x with g(x) = 0 failing
  // both clauses, replacing any u positions of x by Q still gives {0}.
  void p11() {
    current_->statement =
        "Q strongly weakly S-primary with element s, g(x)=0 failing both "
        "clauses => g(x with any u positions replaced by Q) = 0";
    forStronglyWeakly([&](const CorpusStructure& c, ElementSet s, ElementSet q,
                          ElementId w) {
      const HyperringTable& a = c.table();
      const ElementSet rad = c.analyzer->radical(q);
      const ElementSet zero = ElementSet::single(a.zero());
      const auto n = static_cast<std::size_t>(a.n());
      std::vector<ElementId> buf(n);
      forEachMultiset(a.size(), a.n(), [&](std::span<const ElementId> x) {
        if (a.g(x) != a.zero()) return true;
        for (std::size_t i = 0; i < n; ++i) {
          if (q.contains(a.mul(w, x[i]))) return true;
          std::copy(x.begin(), x.end(), buf.begin());
          buf[i] = w;
          if (rad.contains(a.g(buf))) return true;
        }
        instance();
        std::vector<ElementSet> sets(n);
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
          for (std::size_t i = 0; i < n; ++i) {
            sets[i] = ((mask >> i) & 1U) ? q : ElementSet::single(x[i]);
          }
          const ElementSet prod = setProduct(a, sets);
          if (prod != zero) {
            std::string replaced;
            for (std::size_t i = 0; i < n; ++i) {
              if ((mask >> i) & 1U) replaced += std::to_string(i + 1) + " ";
            }
            counterexample({{"structure", c.name},
                            {"S", set(c, s)},
                            {"Q", set(c, q)},
                            {"s", a.label(w)},
                            {"x", formatTuple(a, x)},
                            {"replaced positions", replaced},
                            {"product", set(c, prod)}});
            break;
          }
        }
        return true;
      });
    });
  }

  // Strongly weakly with g(Q^(n)) != 0 => S-primary.
  void p12() {
    current_->statement =
        "Q strongly weakly S-primary and g(Q^(n)) != 0 => Q S-primary";
    forStronglyWeakly([&](const CorpusStructure& c, ElementSet s, ElementSet q,
                          ElementId) {
      const HyperringTable& a = c.table();
      const std::vector<ElementSet> sets(static_cast<std::size_t>(a.n()), q);
      if (setProduct(a, sets) == ElementSet::single(a.zero())) return;
      instance();
      if (!verdicts_.holds(*c.analyzer, Predicate::SPrimary, q, s)) {
        counterexample({{"structure", c.name}, {"S", set(c, s)}, {"Q", set(c, q)}});
      }
    });
  }

  // Strongly weakly but not S-primary => rad(Q) = rad(0).
  void p13() {
    current_->statement =
        "Q strongly weakly S-primary, not S-primary => rad(Q) = rad(0)";
    forStronglyWeakly([&](const CorpusStructure& c, ElementSet s, ElementSet q,
                          ElementId) {
      if (verdicts_.holds(*c.analyzer, Predicate::SPrimary, q, s)) return;
      instance();
      const ElementSet r = c.analyzer->radical(q);
      const ElementSet r0 =
          c.analyzer->radical(ElementSet::single(c.table().zero()));
      if (r != r0) {
        counterexample({{"structure", c.name},
                        {"S", set(c, s)},
                        {"Q", set(c, q)},
                        {"rad(Q)", set(c, r)},
                        {"rad(0)", set(c, r0)}});
      }
    });
  }

  const Corpus& corpus_;
  PropertyResult* current_ = nullptr;
  Verdicts verdicts_;
  std::map<std::pair<const CorpusStructure*, std::uint64_t>, Localized>
      localized_;
};

}  // namespace

std::vector<std::string> propertyNames() { return names(); }

std::vector<PropertyResult> runSuite(const Corpus& corpus,
                                     const std::vector<std::string>& selection) {
  for (const auto& s : selection) {
    if (std::find(names().begin(), names().end(), s) == names().end()) {
      throw PreconditionError("unknown property " + s);
    }
  }
  Suite suite(corpus);
  std::vector<PropertyResult> out;
  for (const auto& name : names()) {
    if (!selection.empty() &&
        std::find(selection.begin(), selection.end(), name) == selection.end()) {
      continue;
    }
    out.push_back(suite.run(name));
  }
  return out;
}

}  // namespace krasner
