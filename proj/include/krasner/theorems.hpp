#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "krasner/classify.hpp"
#include "krasner/hyperring.hpp"

namespace krasner {

struct CorpusConfig {
  /// Structures above this carrier size are rejected.
  std::size_t maxSize = 16;
  /// Largest multiplicative set enumerated per structure.
  std::size_t maxMulSetSize = 4;
  bool includeDefaults = true;
};

struct CorpusStructure {
  std::string name;
  std::shared_ptr<const Analyzer> analyzer;
  /// Zero-free g-closed subsets up to the configured size.
  std::vector<ElementSet> mulsets;

  const HyperringTable& table() const { return analyzer->structure(); }
};

/// A structure that is the product of other corpus members, in order.
struct CorpusProduct {
  std::vector<std::size_t> factors;
  std::size_t product = 0;
};

/// A verified injective homomorphism between corpus members.
struct CorpusHom {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<ElementId> map;
};

struct Corpus {
  CorpusConfig config;
  std::vector<CorpusStructure> structures;
  std::vector<CorpusProduct> products;
  std::vector<CorpusHom> homs;

  /// Adds a structure after checking the size cap and the axioms; returns
  /// its index. Throws PreconditionError or StructureError.
  std::size_t add(std::string name, const HyperringTable& table);
  /// Adds an injective homomorphism after verifying it.
  void addHom(std::string name, std::size_t source, std::size_t target,
              std::vector<ElementId> map);
};

/// Default corpus: quotients of Z_4, Z_6, Z_8, Z_9, Z_12 by every unit
/// subgroup, chains of length 2..5, products of the two smallest members
/// (both orders and squares), three triple products, Z_12/U x chain(2),
/// Z_4 x Z_4, all for n in {2, 3}; plus swap, diagonal and subhyperring
/// embeddings.
Corpus buildCorpus(const CorpusConfig& config);

struct Binding {
  std::vector<std::pair<std::string, std::string>> values;
  std::string note;
};

struct PropertyResult {
  std::string name;
  std::string statement;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::string skipReason;
  /// Negative controls pass when they find a counterexample.
  bool negativeControl = false;
  std::size_t counterexampleCount = 0;
  /// The first few counterexamples with full bindings.
  std::vector<Binding> counterexamples;
  std::string note;

  bool passed() const;
};

/// P1, P2-setwise, P2-ideal, P3, ..., P13, P10-kfold, N1, N3.
std::vector<std::string> propertyNames();

/// Runs the selected properties (all when empty). Unknown names throw
/// PreconditionError.
std::vector<PropertyResult> runSuite(const Corpus& corpus,
                                     const std::vector<std::string>& selection);

}  // namespace krasner
