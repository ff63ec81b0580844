#include "krasner/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "krasner/builders.hpp"
#include "krasner/ideals.hpp"

namespace krasner {

DslError::DslError(const std::string& message, Position pos)
    : Error(message + " at " + std::to_string(pos.line) + ":" +
            std::to_string(pos.column)),
      message_(message),
      pos_(pos) {}

namespace {

constexpr int kMaxInt = 1 << 20;
constexpr int kMaxNesting = 16;
constexpr std::uint64_t kMaxTableEntries = 4'000'000;

enum class Tok { Ident, Int, Punct, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Position pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Int:
      return "integer " + t.text;
    case Tok::Ident:
      return "'" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  Position pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    std::size_t j = i;
    if (std::isalpha(c) || c == '_') {
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      t.kind = Tok::Ident;
    } else if (std::isdigit(c)) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      t.kind = Tok::Int;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      j = i + 2;
      t.kind = Tok::Arrow;
    } else if (std::string_view("={}(),:").find(static_cast<char>(c)) !=
               std::string_view::npos) {
      j = i + 1;
      t.kind = Tok::Punct;
    } else {
      const std::string shown =
          std::isprint(c) ? std::string(1, static_cast<char>(c))
                          : "byte " + std::to_string(static_cast<int>(c));
      throw DslError("unexpected character " + shown, pos);
    }
    t.text = text.substr(i, j - i);
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::End) {
      const Token& kw = peek();
      if (isWord("hyperring")) {
        doc.decls.emplace_back(structDecl());
      } else if (isWord("ideal")) {
        IdealDecl d;
        subsetDecl(d, "ideal", "generate", ideals_);
        doc.decls.emplace_back(std::move(d));
      } else if (isWord("mulset")) {
        MulSetDecl d;
        subsetDecl(d, "mulset", "closure", mulsets_);
        doc.decls.emplace_back(std::move(d));
      } else if (isWord("hom")) {
        doc.decls.emplace_back(homDecl());
      } else {
        throw DslError("expected a declaration but found " + describe(kw),
                       kw.pos);
      }
    }
    return doc;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token next() {
    Token t = toks_[at_];
    if (t.kind != Tok::End) ++at_;
    return t;
  }
  bool isWord(const char* w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  bool isPunct(const char* p) const {
    return peek().kind == Tok::Punct && peek().text == p;
  }
  Token expectPunct(const char* p) {
    if (!isPunct(p)) {
      throw DslError(std::string("expected '") + p + "' but found " +
                         describe(peek()),
                     peek().pos);
    }
    return next();
  }
  Token expectWord(const char* w) {
    if (!isWord(w)) {
      throw DslError(std::string("expected '") + w + "' but found " +
                         describe(peek()),
                     peek().pos);
    }
    return next();
  }
  Token expectArrow() {
    if (peek().kind != Tok::Arrow) {
      throw DslError("expected '->' but found " + describe(peek()), peek().pos);
    }
    return next();
  }
  Token ident(const char* what) {
    if (peek().kind != Tok::Ident) {
      throw DslError(std::string("expected ") + what + " but found " +
                         describe(peek()),
                     peek().pos);
    }
    return next();
  }
  int integer(int lo, int hi) {
    const Token t = peek();
    if (t.kind != Tok::Int) {
      throw DslError("expected an integer but found " + describe(t), t.pos);
    }
    next();
    const std::string digits = t.text.substr(
        std::min(t.text.find_first_not_of('0'), t.text.size() - 1));
    if (digits.size() > 8 || std::stoi(digits) > kMaxInt) {
      throw DslError("integer " + t.text + " is too large", t.pos);
    }
    const int v = std::stoi(digits);
    if (v < lo || v > hi) {
      throw DslError("integer " + t.text + " outside " + std::to_string(lo) +
                         ".." + std::to_string(hi),
                     t.pos);
    }
    return v;
  }

  /// IDENT | INT | "(" element ("," element)* ")".
  std::string element(int depth = 0) {
    const Token t = peek();
    if (t.kind == Tok::Ident || t.kind == Tok::Int) return next().text;
    if (isPunct("(")) {
      if (depth >= kMaxNesting) throw DslError("element nested too deeply", t.pos);
      next();
      std::string out = "(" + element(depth + 1);
      while (isPunct(",")) {
        next();
        out += "," + element(depth + 1);
      }
      expectPunct(")");
      return out + ")";
    }
    throw DslError("expected an element but found " + describe(t), t.pos);
  }

  std::vector<std::string> elementSet() {
    expectPunct("{");
    std::vector<std::string> out;
    if (!isPunct("}")) {
      out.push_back(element());
      while (isPunct(",")) {
        next();
        out.push_back(element());
      }
    }
    expectPunct("}");
    return out;
  }

  std::vector<std::string> argList(int arity, const char* op) {
    const Token open = expectPunct("(");
    std::vector<std::string> out{element()};
    while (isPunct(",")) {
      next();
      out.push_back(element());
    }
    expectPunct(")");
    if (static_cast<int>(out.size()) != arity) {
      throw DslError(std::string(op) + " takes " + std::to_string(arity) +
                         " arguments, found " + std::to_string(out.size()),
                     open.pos);
    }
    return out;
  }

  std::string structureRef(Position* pos) {
    const Token t = ident("a structure name");
    if (!structures_.count(t.text)) {
      throw DslError("unresolved reference " + t.text, t.pos);
    }
    *pos = t.pos;
    return t.text;
  }

  void declare(std::set<std::string>& names, const Token& name,
               const char* kind) {
    if (!names.insert(name.text).second) {
      throw DslError(std::string("duplicate ") + kind + " " + name.text,
                     name.pos);
    }
  }

  StructDecl structDecl() {
    StructDecl d;
    d.pos = next().pos;
    const Token name = ident("a structure name");
    d.name = name.text;
    expectPunct("=");
    const Token kind = ident("a builder");
    if (kind.text == "quotient_zn") {
      QuotientBuilder q;
      expectPunct("(");
      q.modulus = integer(2, kMaxInt);
      expectPunct(",");
      expectPunct("{");
      if (!isPunct("}")) {
        q.units.push_back(integer(0, kMaxInt));
        while (isPunct(",")) {
          next();
          q.units.push_back(integer(0, kMaxInt));
        }
      }
      expectPunct("}");
      if (isPunct(",")) {
        next();
        expectWord("n");
        expectPunct("=");
        q.n = integer(2, kMaxArity);
      }
      expectPunct(")");
      d.builder = std::move(q);
    } else if (kind.text == "chain") {
      ChainBuilder c;
      expectPunct("(");
      c.length = integer(1, kMaxInt);
      expectPunct(",");
      expectWord("n");
      expectPunct("=");
      c.n = integer(2, kMaxArity);
      expectPunct(")");
      d.builder = c;
    } else if (kind.text == "product") {
      ProductBuilder p;
      expectPunct("(");
      p.left = structureRef(&p.leftPos);
      expectPunct(",");
      p.right = structureRef(&p.rightPos);
      expectPunct(")");
      d.builder = std::move(p);
    } else if (kind.text == "tables") {
      d.builder = tables(kind.pos);
    } else {
      throw DslError("unknown builder " + kind.text, kind.pos);
    }
    declare(structures_, name, "hyperring");
    return d;
  }

  TableBuilder tables(Position pos) {
    TableBuilder t;
    t.pos = pos;
    expectPunct("{");
    expectWord("m");
    expectPunct("=");
    t.m = integer(2, kMaxArity);
    expectWord("n");
    expectPunct("=");
    t.n = integer(2, kMaxArity);
    expectWord("elements");
    t.elements = elementSet();
    expectWord("zero");
    t.zero = element();
    expectWord("one");
    t.one = element();
    while (!isPunct("}")) {
      const Token op = ident("'neg', 'f', 'g' or '}'");
      if (op.text == "neg") {
        const auto args = argList(1, "neg");
        expectPunct("=");
        t.negation.emplace_back(args[0], element());
      } else if (op.text == "f") {
        auto args = argList(t.m, "f");
        expectPunct("=");
        t.f.emplace_back(std::move(args), elementSet());
      } else if (op.text == "g") {
        auto args = argList(t.n, "g");
        expectPunct("=");
        t.g.emplace_back(std::move(args), element());
      } else {
        throw DslError("expected 'neg', 'f', 'g' or '}' but found " +
                           describe(op),
                       op.pos);
      }
    }
    expectPunct("}");
    return t;
  }

  template <typename D>
  void subsetDecl(D& d, const char* keyword, const char* closer,
                  std::set<std::string>& names) {
    d.pos = next().pos;
    const Token name = ident("a name");
    d.name = name.text;
    expectWord("in");
    d.structure = structureRef(&d.structurePos);
    expectPunct("=");
    if (isWord(closer)) {
      next();
      d.closed = true;
    }
    d.elements = elementSet();
    declare(names, name, keyword);
  }

  HomDecl homDecl() {
    HomDecl h;
    h.pos = next().pos;
    const Token name = ident("a homomorphism name");
    h.name = name.text;
    expectPunct(":");
    h.source = structureRef(&h.sourcePos);
    expectArrow();
    h.target = structureRef(&h.targetPos);
    expectPunct("=");
    expectPunct("{");
    while (!isPunct("}")) {
      std::string from = element();
      expectArrow();
      h.map.emplace_back(std::move(from), element());
      if (!isPunct("}")) expectPunct(",");
    }
    expectPunct("}");
    declare(homs_, name, "hom");
    return h;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::set<std::string> structures_;
  std::set<std::string> ideals_;
  std::set<std::string> mulsets_;
  std::set<std::string> homs_;
};

std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

std::string braced(const std::vector<std::string>& xs) {
  return "{" + joined(xs) + "}";
}

struct Printer {
  std::string out;

  void operator()(const StructDecl& d) {
    out += "hyperring " + d.name + " = ";
    std::visit(*this, d.builder);
  }
  void operator()(const QuotientBuilder& q) {
    std::vector<std::string> units;
    for (int u : q.units) units.push_back(std::to_string(u));
    out += "quotient_zn(" + std::to_string(q.modulus) + ", " + braced(units);
    if (q.n) out += ", n=" + std::to_string(*q.n);
    out += ")\n";
  }
  void operator()(const ChainBuilder& c) {
    out += "chain(" + std::to_string(c.length) + ", n=" + std::to_string(c.n) +
           ")\n";
  }
  void operator()(const ProductBuilder& p) {
    out += "product(" + p.left + ", " + p.right + ")\n";
  }
  void operator()(const TableBuilder& t) {
    out += "tables {\n";
    out += "  m = " + std::to_string(t.m) + "\n";
    out += "  n = " + std::to_string(t.n) + "\n";
    out += "  elements " + braced(t.elements) + "\n";
    out += "  zero " + t.zero + "\n";
    out += "  one " + t.one + "\n";
    for (const auto& [x, y] : t.negation) out += "  neg(" + x + ") = " + y + "\n";
    for (const auto& [args, v] : t.f) {
      out += "  f(" + joined(args) + ") = " + braced(v) + "\n";
    }
    for (const auto& [args, v] : t.g) {
      out += "  g(" + joined(args) + ") = " + v + "\n";
    }
    out += "}\n";
  }
  void operator()(const IdealDecl& d) { subset("ideal", "generate ", d); }
  void operator()(const MulSetDecl& d) { subset("mulset", "closure ", d); }
  void subset(const char* keyword, const char* closer, const SubsetDecl& d) {
    out += std::string(keyword) + " " + d.name + " in " + d.structure + " = " +
           (d.closed ? closer : "") + braced(d.elements) + "\n";
  }
  void operator()(const HomDecl& h) {
    out += "hom " + h.name + " : " + h.source + " -> " + h.target + " = {";
    for (std::size_t i = 0; i < h.map.size(); ++i) {
      out += (i ? ", " : "") + h.map[i].first + " -> " + h.map[i].second;
    }
    out += "}\n";
  }
};

class Elaborator {
 public:
  Elaborator(Elaboration& out, std::size_t maxSize)
      : out_(out), maxSize_(maxSize) {}

  void operator()(const StructDecl& d) {
    HyperringTable t = std::visit(
        [&](const auto& b) { return build(b, d.pos); }, d.builder);
    if (t.size() > maxSize_) tooLarge(t.size(), d.pos);
    out_.structures.emplace_back(d.name, std::move(t));
  }

  void operator()(const IdealDecl& d) {
    const HyperringTable& a = out_.structure(d.structure);
    ElementSet x = resolve(a, d.elements, d.pos);
    if (d.closed) x = generateHyperideal(a, x);
    out_.ideals[d.name] = {d.structure, x};
  }

  void operator()(const MulSetDecl& d) {
    const HyperringTable& a = out_.structure(d.structure);
    ElementSet x = resolve(a, d.elements, d.pos);
    if (d.closed) {
      try {
        x = multiplicativeClosure(a, x);
      } catch (const Error& e) {
        throw DslError(e.what(), d.pos);
      }
    }
    out_.mulsets[d.name] = {d.structure, x};
  }

  void operator()(const HomDecl& h) {
    const HyperringTable& a = out_.structure(h.source);
    const HyperringTable& b = out_.structure(h.target);
    std::vector<ElementId> map(a.size(), 0);
    ElementSet assigned;
    for (const auto& [from, to] : h.map) {
      const ElementId x = resolve(a, from, h.pos);
      if (assigned.contains(x)) {
        throw DslError("element " + from + " mapped twice", h.pos);
      }
      assigned.insert(x);
      map[x] = resolve(b, to, h.pos);
    }
    if (assigned != a.carrier()) {
      const ElementId missing = (a.carrier() - assigned).first();
      throw DslError("no image for element " + a.label(missing), h.pos);
    }
    out_.homs.emplace(h.name, Homomorphism{a, b, std::move(map)});
  }

 private:
  HyperringTable build(const QuotientBuilder& q, Position pos) {
    if (q.modulus > 4096) {
      throw DslError("modulus " + std::to_string(q.modulus) + " is too large",
                     pos);
    }
    std::vector<bool> seen(static_cast<std::size_t>(q.modulus), false);
    std::size_t orbits = 0;
    for (int x = 0; x < q.modulus; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      ++orbits;
      for (int u : q.units) {
        seen[static_cast<std::size_t>(
            (static_cast<long long>(x) * u) % q.modulus)] = true;
      }
    }
    if (orbits > maxSize_) tooLarge(orbits, pos);
    checkCost(orbits, 2, q.n.value_or(2), pos);
    return guarded(pos, [&] {
      return quotientByUnits({q.modulus, q.units, q.n.value_or(2)});
    });
  }
  HyperringTable build(const ChainBuilder& c, Position pos) {
    if (static_cast<std::size_t>(c.length) > maxSize_) tooLarge(c.length, pos);
    checkCost(static_cast<std::size_t>(c.length), 2, c.n, pos);
    return guarded(pos, [&] { return chain(c.length, c.n); });
  }
  HyperringTable build(const ProductBuilder& p, Position pos) {
    const HyperringTable& a = out_.structure(p.left);
    const HyperringTable& b = out_.structure(p.right);
    if (a.size() * b.size() > maxSize_) tooLarge(a.size() * b.size(), pos);
    checkCost(a.size() * b.size(), a.m(), a.n(), pos);
    return guarded(pos, [&] { return product(a, b); });
  }
  HyperringTable build(const TableBuilder& t, Position pos) {
    if (t.elements.size() > maxSize_) tooLarge(t.elements.size(), pos);
    checkCost(t.elements.size(), t.m, t.n, pos);
    std::map<std::string, ElementId> index;
    for (const auto& e : t.elements) {
      if (!index.emplace(e, static_cast<ElementId>(index.size())).second) {
        throw DslError("duplicate element " + e, pos);
      }
    }
    auto id = [&](const std::string& e) {
      const auto it = index.find(e);
      if (it == index.end()) throw DslError("unknown element " + e, pos);
      return it->second;
    };
    RawTables raw;
    raw.m = t.m;
    raw.n = t.n;
    raw.labels = t.elements;
    raw.zero = id(t.zero);
    raw.one = id(t.one);
    if (!t.negation.empty()) {
      std::vector<ElementId> neg(t.elements.size(), 0);
      ElementSet seen;
      for (const auto& [x, y] : t.negation) {
        neg[id(x)] = id(y);
        seen.insert(id(x));
      }
      if (seen.size() != t.elements.size()) {
        throw DslError("neg must be given for every element or none", pos);
      }
      raw.negation = std::move(neg);
    }
    for (const auto& [args, vals] : t.f) {
      std::vector<ElementId> ids;
      for (const auto& x : args) ids.push_back(id(x));
      ElementSet v;
      for (const auto& x : vals) v.insert(id(x));
      raw.f.emplace_back(std::move(ids), v);
    }
    for (const auto& [args, val] : t.g) {
      std::vector<ElementId> ids;
      for (const auto& x : args) ids.push_back(id(x));
      raw.g.emplace_back(std::move(ids), id(val));
    }
    return guarded(pos, [&] { return fromTables(raw); });
  }

  template <typename Fn>
  static HyperringTable guarded(Position pos, Fn&& fn) {
    try {
      return fn();
    } catch (const DslError&) {
      throw;
    } catch (const Error& e) {
      throw DslError(e.what(), pos);
    }
  }

  [[noreturn]] void tooLarge(std::size_t size, Position pos) const {
    throw DslError("structure has " + std::to_string(size) +
                       " elements, above the size cap of " +
                       std::to_string(maxSize_),
                   pos);
  }

  static void checkCost(std::size_t size, int m, int n, Position pos) {
    if (multisetCount(size, std::max(m, n)) > kMaxTableEntries) {
      throw DslError("operation tables would exceed " +
                         std::to_string(kMaxTableEntries) + " entries",
                     pos);
    }
  }

  static ElementId resolve(const HyperringTable& a, const std::string& label,
                           Position pos) {
    const auto id = a.find(label);
    if (!id) throw DslError("unknown element " + label, pos);
    return *id;
  }
  static ElementSet resolve(const HyperringTable& a,
                            const std::vector<std::string>& labels,
                            Position pos) {
    ElementSet out;
    for (const auto& l : labels) out.insert(resolve(a, l, pos));
    return out;
  }

  Elaboration& out_;
  std::size_t maxSize_;
};

}  // namespace

Document parse(const std::string& text) {
  return Parser(lex(text)).document();
}

std::string print(const Document& doc) {
  Printer p;
  for (const auto& d : doc.decls) std::visit(p, d);
  return p.out;
}

const HyperringTable& Elaboration::structure(const std::string& name) const {
  for (const auto& [n, t] : structures) {
    if (n == name) return t;
  }
  throw PreconditionError("unknown structure " + name);
}

Elaboration elaborate(const Document& doc, std::size_t maxSize) {
  Elaboration out;
  Elaborator e(out, maxSize);
  for (const auto& d : doc.decls) std::visit(e, d);
  return out;
}

}  // namespace krasner
