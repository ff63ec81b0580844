#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "krasner/element_set.hpp"
#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

namespace krasner {

/// Literal table description. Keys may be given in any order; each multiset
/// must appear at least once and every repetition must agree.
struct RawTables {
  int m = 2;
  int n = 2;
  std::vector<std::string> labels;
  ElementId zero = 0;
  ElementId one = 0;
  /// Derived from f when absent: the least y with zero in f(x, y, 0, ...).
  std::optional<std::vector<ElementId>> negation;
  std::vector<std::pair<std::vector<ElementId>, ElementSet>> f;
  std::vector<std::pair<std::vector<ElementId>, ElementId>> g;
};

/// A finite commutative Krasner (m,n)-hyperring given by its operation
/// tables. f is the m-ary hyperaddition, g the n-ary multiplication.
///
/// Tables are keyed by multisets, so commutativity holds by construction.
/// Nothing else is validated here; see checkAxioms. Instances are immutable
/// and share their tables, so copies are cheap.
class HyperringTable {
 public:
  using HyperaddFn = std::function<ElementSet(std::span<const ElementId>)>;
  using MultiplyFn = std::function<ElementId(std::span<const ElementId>)>;

  /// Tabulates f and g on every sorted multiset. Throws StructureError on an
  /// empty or out-of-range f value, an out-of-range g value, or bad arities.
  static HyperringTable fromFunctions(int m, int n,
                                      std::vector<std::string> labels,
                                      ElementId zero, ElementId one,
                                      std::vector<ElementId> negation,
                                      const HyperaddFn& f,
                                      const MultiplyFn& g);

  int m() const { return data_->m; }
  int n() const { return data_->n; }
  std::size_t size() const { return data_->size; }
  ElementId zero() const { return data_->zero; }
  ElementId one() const { return data_->one; }
  ElementId negation(ElementId x) const { return data_->negation[x]; }
  ElementSet carrier() const { return ElementSet::all(data_->size); }

  const std::string& label(ElementId x) const { return data_->labels[x]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::optional<ElementId> find(std::string_view label) const;

  /// Unchecked lookups; the tuple must have the right arity and valid ids.
  ElementSet f(std::span<const ElementId> tuple) const;
  ElementId g(std::span<const ElementId> tuple) const;
  /// g(a, b, 1^(n-2)).
  ElementId mul(ElementId a, ElementId b) const {
    return data_->mul[a * data_->size + b];
  }
  /// f(a, b, 0^(m-2)).
  ElementSet add(ElementId a, ElementId b) const {
    return data_->add[a * data_->size + b];
  }

  /// Every multiset entry of both tables, in rank order.
  RawTables toRaw() const;

  friend bool operator==(const HyperringTable& a, const HyperringTable& b);

 private:
  struct Data {
    int m = 2;
    int n = 2;
    std::size_t size = 0;
    std::vector<std::string> labels;
    ElementId zero = 0;
    ElementId one = 0;
    std::vector<ElementId> negation;
    std::vector<ElementSet> fRanked;
    std::vector<ElementId> gRanked;
    // Full-tensor copies of the ranked tables when they fit.
    std::vector<ElementSet> fDense;
    std::vector<std::uint8_t> gDense;
    std::vector<ElementId> mul;
    std::vector<ElementSet> add;
  };

  explicit HyperringTable(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Builds a structure from literal tables without checking the axioms.
HyperringTable fromTables(const RawTables& raw);

ElementSet evalF(const HyperringTable& a, std::span<const ElementId> tuple);
ElementId evalG(const HyperringTable& a, std::span<const ElementId> tuple);
/// Union of f over every choice of one element per set.
ElementSet evalFOnSets(const HyperringTable& a,
                       std::span<const ElementSet> sets);
ElementSet evalGOnSets(const HyperringTable& a,
                       std::span<const ElementSet> sets);
/// Left-nested g over a tuple of length l(n-1)+1.
ElementId evalGIterated(const HyperringTable& a, int l,
                        std::span<const ElementId> tuple);
/// p_1 = x, p_{k+1} = g(p_k, x, 1^(n-2)).
ElementId power(const HyperringTable& a, ElementId x, unsigned k);

struct AxiomViolation {
  std::string axiom;
  std::vector<ElementId> witness;
  std::string explanation;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool passed() const { return violations.empty(); }
  const AxiomViolation* find(std::string_view axiom) const;
};

/// Exhaustive check of the canonical hypergroup and Krasner hyperring
/// axioms. Reports the first witness of each violated axiom.
AxiomReport checkAxioms(const HyperringTable& a);

/// "{a,b,c}" using element labels.
std::string formatSet(const HyperringTable& a, ElementSet set);
/// "(a,b,c)" using element labels.
std::string formatTuple(const HyperringTable& a,
                        std::span<const ElementId> tuple);

}  // namespace krasner
