#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "krasner/errors.hpp"
#include "krasner/hyperring.hpp"
#include "krasner/morphisms.hpp"

namespace krasner {

/// 1-based source position. Positions never affect AST equality.
struct Position {
  int line = 1;
  int column = 1;

  bool operator==(const Position&) const { return true; }
};

/// A positioned diagnostic; what() ends with "at LINE:COL".
class DslError : public Error {
 public:
  DslError(const std::string& message, Position pos);
  const std::string& message() const { return message_; }
  Position position() const { return pos_; }

 private:
  std::string message_;
  Position pos_;
};

struct QuotientBuilder {
  int modulus = 0;
  std::vector<int> units;
  std::optional<int> n;
  bool operator==(const QuotientBuilder&) const = default;
};

struct ChainBuilder {
  int length = 0;
  int n = 2;
  bool operator==(const ChainBuilder&) const = default;
};

struct ProductBuilder {
  std::string left;
  Position leftPos;
  std::string right;
  Position rightPos;
  bool operator==(const ProductBuilder&) const = default;
};

struct TableBuilder {
  int m = 2;
  int n = 2;
  std::vector<std::string> elements;
  std::string zero;
  std::string one;
  std::vector<std::pair<std::string, std::string>> negation;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> f;
  std::vector<std::pair<std::vector<std::string>, std::string>> g;
  Position pos;
  bool operator==(const TableBuilder&) const = default;
};

using Builder =
    std::variant<QuotientBuilder, ChainBuilder, ProductBuilder, TableBuilder>;

struct StructDecl {
  std::string name;
  Builder builder;
  Position pos;
  bool operator==(const StructDecl&) const = default;
};

/// `ideal Q in A = {...}` or `= generate {...}`; also used for mulsets with
/// `closure` in place of `generate`.
struct SubsetDecl {
  std::string name;
  std::string structure;
  bool closed = false;
  std::vector<std::string> elements;
  Position pos;
  Position structurePos;
  bool operator==(const SubsetDecl&) const = default;
};

struct IdealDecl : SubsetDecl {
  bool operator==(const IdealDecl&) const = default;
};
struct MulSetDecl : SubsetDecl {
  bool operator==(const MulSetDecl&) const = default;
};

struct HomDecl {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, std::string>> map;
  Position pos;
  Position sourcePos;
  Position targetPos;
  bool operator==(const HomDecl&) const = default;
};

using Decl = std::variant<StructDecl, IdealDecl, MulSetDecl, HomDecl>;

struct Document {
  std::vector<Decl> decls;
  bool operator==(const Document&) const = default;
};

/// Throws DslError on any syntax error. Never crashes on arbitrary input.
Document parse(const std::string& text);

/// Canonical text form; parse(print(d)) == d.
std::string print(const Document& doc);

struct NamedIdeal {
  std::string structure;
  ElementSet elements;
};

/// Resolved structures, subsets and maps of a document.
struct Elaboration {
  std::vector<std::pair<std::string, HyperringTable>> structures;
  std::map<std::string, NamedIdeal> ideals;
  std::map<std::string, NamedIdeal> mulsets;
  std::map<std::string, Homomorphism> homs;

  const HyperringTable& structure(const std::string& name) const;
};

/// Builds every declaration in order. Throws DslError for unresolved or
/// duplicate names, unknown elements, inconsistent arities and structures
/// above maxSize; builder failures are reported at the declaration.
Elaboration elaborate(const Document& doc, std::size_t maxSize = 16);

}  // namespace krasner
