#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "krasner/hyperring.hpp"

namespace krasner {

enum class Predicate {
  Prime,
  Primary,
  SPrime,
  SPrimary,
  WeaklySPrime,
  WeaklySPrimary,
  StronglyWeaklySPrimary,
};

inline constexpr Predicate kAllPredicates[] = {
    Predicate::Prime,         Predicate::Primary,
    Predicate::SPrime,        Predicate::SPrimary,
    Predicate::WeaklySPrime,  Predicate::WeaklySPrimary,
    Predicate::StronglyWeaklySPrimary,
};

/// "prime", "primary", "sPrime", "sPrimary", "weaklySPrime",
/// "weaklySPrimary", "stronglyWeaklySPrimary".
std::string_view predicateName(Predicate p);
std::optional<Predicate> parsePredicate(std::string_view name);
/// True for the predicates quantified over a multiplicative set.
bool usesMulSet(Predicate p);

struct Counterexample {
  /// The candidate s it refutes; empty for prime and primary.
  std::optional<ElementId> s;
  /// Element tuple, or empty when the counterexample is a hyperideal tuple.
  std::vector<ElementId> tuple;
  std::vector<ElementSet> ideals;
  std::string clause;
};

struct PredicateVerdict {
  Predicate predicate = Predicate::Prime;
  bool holds = false;
  /// Least s in S that works, for S-indexed predicates that hold.
  std::optional<ElementId> witness;
  /// Stored for the least s when the predicate fails.
  std::optional<Counterexample> counterexample;
};

struct Implication {
  std::string name;
  bool consistent = true;
};

struct ClassificationReport {
  ElementSet q;
  ElementSet s;
  std::vector<PredicateVerdict> verdicts;
  std::vector<Implication> implications;

  const PredicateVerdict& verdict(Predicate p) const;
  bool consistent() const;
};

enum class RadicalMode { Primes, Powers };

/// Precomputes the hyperideal lattice, primes, and radicals of one structure
/// and answers predicate queries against them. Immutable after construction.
class Analyzer {
 public:
  explicit Analyzer(HyperringTable a, RadicalMode mode = RadicalMode::Primes);

  const HyperringTable& structure() const { return a_; }
  const std::vector<ElementSet>& ideals() const { return ideals_; }
  const std::vector<ElementSet>& primes() const { return primes_; }
  RadicalMode radicalMode() const { return mode_; }

  bool isIdeal(ElementSet q) const { return index_.count(q.bits()) != 0; }
  /// Throws PreconditionError unless q is a hyperideal.
  ElementSet radical(ElementSet q) const;

  /// S is ignored for prime and primary. Throws PreconditionError when Q is
  /// not a hyperideal, Q = A for prime/primary, or Q meets S.
  PredicateVerdict evaluate(Predicate p, ElementSet q, ElementSet s = {}) const;

  /// First counterexample refuting s as a witness, or nullopt if s works.
  std::optional<Counterexample> refute(Predicate p, ElementSet q,
                                       ElementId s) const;

  ClassificationReport classifyAll(ElementSet q, ElementSet s) const;

  /// Human-readable scan trace: per candidate s, the witness verdict or the
  /// first counterexample with every clause evaluated.
  std::vector<std::string> explain(Predicate p, ElementSet q,
                                   ElementSet s) const;

 private:
  void checkPreconditions(Predicate p, ElementSet q, ElementSet s) const;
  std::optional<Counterexample> refuteElementwise(Predicate p, ElementSet q,
                                                  ElementSet rad,
                                                  std::optional<ElementId> s) const;
  std::optional<Counterexample> refuteIdealwise(ElementSet q, ElementSet rad,
                                                ElementId s) const;
  std::vector<std::string> describeClauses(Predicate p, ElementSet q,
                                           const Counterexample& c) const;

  HyperringTable a_;
  RadicalMode mode_;
  std::vector<ElementSet> ideals_;
  std::vector<ElementSet> primes_;
  std::vector<ElementSet> radicals_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  /// setProduct of each n-multiset of lattice indices, keyed by rank.
  std::vector<ElementSet> idealProducts_;
};

PredicateVerdict isPrime(const HyperringTable& a, ElementSet q);
PredicateVerdict isPrimary(const HyperringTable& a, ElementSet q);
PredicateVerdict isSPrime(const HyperringTable& a, ElementSet q, ElementSet s);
PredicateVerdict isSPrimary(const HyperringTable& a, ElementSet q,
                            ElementSet s);
PredicateVerdict isWeaklySPrime(const HyperringTable& a, ElementSet q,
                                ElementSet s);
PredicateVerdict isWeaklySPrimary(const HyperringTable& a, ElementSet q,
                                  ElementSet s);
PredicateVerdict isStronglyWeaklySPrimary(const HyperringTable& a,
                                          ElementSet q, ElementSet s);
ClassificationReport classifyAll(const HyperringTable& a, ElementSet q,
                                 ElementSet s);

}  // namespace krasner
