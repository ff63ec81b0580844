#include "krasner/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "krasner/classify.hpp"
#include "krasner/fractions.hpp"
#include "krasner/ideals.hpp"
#include "krasner/radical.hpp"
#include "krasner/theorems.hpp"

namespace krasner {

namespace {

using nlohmann::json;

json setJson(const HyperringTable& a, ElementSet x) {
  json out = json::array();
  for (ElementId e : x) out.push_back(a.label(e));
  return out;
}

json tupleJson(const HyperringTable& a, const std::vector<ElementId>& t) {
  json out = json::array();
  for (ElementId e : t) out.push_back(a.label(e));
  return out;
}

const NamedIdeal& lookup(const std::map<std::string, NamedIdeal>& table,
                         const std::string& name, const char* kind) {
  const auto it = table.find(name);
  if (it == table.end()) {
    throw PreconditionError(std::string("no ") + kind + " named " + name);
  }
  return it->second;
}

std::string counterexampleText(const HyperringTable& a, const Counterexample& c) {
  std::string out;
  if (!c.tuple.empty()) {
    out = formatTuple(a, c.tuple);
  } else {
    for (std::size_t i = 0; i < c.ideals.size(); ++i) {
      out += (i ? " " : "") + formatSet(a, c.ideals[i]);
    }
  }
  if (c.s) out += " s=" + a.label(*c.s);
  return out;
}

json verdictJson(const HyperringTable& a, const PredicateVerdict& v) {
  json out;
  out["predicate"] = std::string(predicateName(v.predicate));
  out["holds"] = v.holds;
  if (v.witness) out["witness"] = a.label(*v.witness);
  if (v.counterexample) {
    const Counterexample& c = *v.counterexample;
    json ce;
    if (!c.tuple.empty()) ce["tuple"] = tupleJson(a, c.tuple);
    if (!c.ideals.empty()) {
      ce["ideals"] = json::array();
      for (ElementSet q : c.ideals) ce["ideals"].push_back(setJson(a, q));
    }
    if (c.s) ce["s"] = a.label(*c.s);
    ce["clause"] = c.clause;
    out["counterexample"] = ce;
  }
  return out;
}

class Runner {
 public:
  Runner(const Document& doc, const CommandOptions& opt, std::ostream& out)
      : doc_(doc), opt_(opt), out_(out), env_(elaborate(doc, opt.maxSize)) {}

  int run() {
    const std::string& c = opt_.command;
    if (c == "check") return check();
    if (c == "ideals") return ideals();
    if (c == "radical") return radical();
    if (c == "classify") return classify();
    if (c == "localize") return localizeCmd();
    if (c == "explain") return explain();
    if (c == "verify") return verify();
    throw PreconditionError("unknown command " + c);
  }

 private:
  void needArgs(std::size_t k, const char* usage) const {
    if (opt_.args.size() != k) {
      throw PreconditionError(std::string("usage: ") + usage);
    }
  }

  std::vector<std::pair<std::string, const HyperringTable*>> selected() const {
    std::vector<std::pair<std::string, const HyperringTable*>> out;
    for (const auto& [name, t] : env_.structures) {
      if (!opt_.structure || *opt_.structure == name) out.emplace_back(name, &t);
    }
    if (opt_.structure && out.empty()) {
      throw PreconditionError("no structure named " + *opt_.structure);
    }
    return out;
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  int check() {
    bool ok = true;
    json report = json::array();
    for (const auto& [name, t] : selected()) {
      const AxiomReport r = checkAxioms(*t);
      ok = ok && r.passed();
      json entry{{"structure", name}, {"size", t->size()}, {"passed", r.passed()}};
      entry["violations"] = json::array();
      for (const auto& v : r.violations) {
        entry["violations"].push_back({{"axiom", v.axiom},
                                       {"witness", tupleJson(*t, v.witness)},
                                       {"explanation", v.explanation}});
      }
      report.push_back(entry);
      if (!opt_.json) {
        out_ << name << ": " << (r.passed() ? "axioms hold" : "axioms violated")
             << " (" << t->size() << " elements, m=" << t->m()
             << ", n=" << t->n() << ")\n";
        for (const auto& v : r.violations) {
          out_ << "  " << v.axiom << " at " << formatTuple(*t, v.witness)
               << ": " << v.explanation << "\n";
        }
      }
    }
    if (opt_.json) emit({{"check", report}});
    return ok ? kExitOk : kExitAxiom;
  }

  int ideals() {
    json report = json::array();
    for (const auto& [name, t] : selected()) {
      const auto lattice = enumerateHyperideals(*t);
      json sets = json::array();
      for (ElementSet q : lattice) sets.push_back(setJson(*t, q));
      report.push_back({{"structure", name}, {"ideals", sets}});
      if (!opt_.json) {
        out_ << name << ": " << lattice.size() << " hyperideals\n";
        for (ElementSet q : lattice) out_ << "  " << formatSet(*t, q) << "\n";
      }
    }
    if (opt_.json) emit({{"ideals", report}});
    return kExitOk;
  }

  int radical() {
    needArgs(1, "radical <ideal>");
    const NamedIdeal& q = lookup(env_.ideals, opt_.args[0], "ideal");
    const HyperringTable& a = env_.structure(q.structure);
    if (const auto c = isHyperideal(a, q.elements); !c) {
      throw PreconditionError(opt_.args[0] + " is not a hyperideal: " + c.reason);
    }
    const RadicalResult byPrimes = radicalByPrimes(a, q.elements);
    const RadicalResult byPowers = radicalByPowers(a, q.elements);
    const bool agree = byPrimes.members == byPowers.members;
    if (opt_.json) {
      json exps = json::object();
      for (const auto& [x, k] : byPowers.exponent) exps[a.label(x)] = k;
      emit({{"ideal", opt_.args[0]},
            {"structure", q.structure},
            {"byPrimes", setJson(a, byPrimes.members)},
            {"byPowers", setJson(a, byPowers.members)},
            {"exponents", exps},
            {"agreement", agree}});
    } else {
      out_ << "radicalByPrimes=" << formatSet(a, byPrimes.members) << "\n"
           << "radicalByPowers=" << formatSet(a, byPowers.members) << "\n"
           << "agreement=" << (agree ? "true" : "false") << "\n";
    }
    return agree ? kExitOk : kExitFalse;
  }

  struct Binding {
    const HyperringTable* a;
    ElementSet q;
    ElementSet s;
  };

  Binding bindQS(const char* usage, std::size_t extra) {
    needArgs(2 + extra, usage);
    const NamedIdeal& q = lookup(env_.ideals, opt_.args[0], "ideal");
    const NamedIdeal& s = lookup(env_.mulsets, opt_.args[1], "mulset");
    if (q.structure != s.structure) {
      throw PreconditionError(opt_.args[0] + " and " + opt_.args[1] +
                              " live in different structures");
    }
    return {&env_.structure(q.structure), q.elements, s.elements};
  }

  int classify() {
    const Binding b = bindQS("classify <ideal> <mulset>", 0);
    const ClassificationReport r = classifyAll(*b.a, b.q, b.s);
    if (opt_.json) {
      json vs = json::array();
      for (const auto& v : r.verdicts) vs.push_back(verdictJson(*b.a, v));
      json imps = json::array();
      for (const auto& i : r.implications) {
        imps.push_back({{"name", i.name}, {"consistent", i.consistent}});
      }
      emit({{"Q", setJson(*b.a, r.q)},
            {"S", setJson(*b.a, r.s)},
            {"verdicts", vs},
            {"implications", imps},
            {"consistent", r.consistent()}});
    } else {
      out_ << "Q=" << formatSet(*b.a, r.q) << " S=" << formatSet(*b.a, r.s)
           << "\n";
      for (const auto& v : r.verdicts) {
        out_ << predicateName(v.predicate) << "=" << (v.holds ? "true" : "false");
        if (v.witness) out_ << " witness=" << b.a->label(*v.witness);
        if (v.counterexample) {
          out_ << " counterexample=" << counterexampleText(*b.a, *v.counterexample);
        }
        out_ << "\n";
      }
      for (const auto& i : r.implications) {
        out_ << "implication " << i.name << " "
             << (i.consistent ? "holds" : "VIOLATED") << "\n";
      }
    }
    return r.consistent() ? kExitOk : kExitFalse;
  }

  int explain() {
    const Binding b = bindQS("explain <ideal> <mulset> <predicate>", 1);
    const auto p = parsePredicate(opt_.args[2]);
    if (!p) throw PreconditionError("unknown predicate " + opt_.args[2]);
    const Analyzer an(*b.a);
    const PredicateVerdict v = an.evaluate(*p, b.q, b.s);
    const auto trace = an.explain(*p, b.q, b.s);
    if (opt_.json) {
      json j = verdictJson(*b.a, v);
      j["trace"] = trace;
      emit(j);
    } else {
      for (const auto& line : trace) out_ << line << "\n";
      out_ << predicateName(*p) << "=" << (v.holds ? "true" : "false") << "\n";
    }
    return v.holds ? kExitOk : kExitFalse;
  }

  int localizeCmd() {
    needArgs(1, "localize <mulset>");
    const NamedIdeal& s = lookup(env_.mulsets, opt_.args[0], "mulset");
    const HyperringTable& a = env_.structure(s.structure);
    const FractionStructure fs = localize(a, s.elements);
    const AxiomReport axioms = checkAxioms(fs.localized);
    const bool hasOne = s.elements.contains(a.one());
    json classes = json::array();
    for (ElementId c = 0; c < fs.localized.size(); ++c) {
      json members = json::array();
      for (std::size_t i = 0; i < fs.pairs.size(); ++i) {
        if (fs.classOf[i] == c) {
          members.push_back(a.label(fs.pairs[i].first) + "/" +
                            a.label(fs.pairs[i].second));
        }
      }
      classes.push_back({{"label", fs.localized.label(c)}, {"members", members}});
    }
    if (opt_.json) {
      json j{{"structure", s.structure},
             {"S", setJson(a, s.elements)},
             {"classes", classes},
             {"axioms", axioms.passed()},
             {"zeroKernel", setJson(a, fs.zeroKernel)}};
      if (hasOne) j["saturation"] = setJson(a, saturate(fs));
      emit(j);
    } else {
      out_ << "S^-1 " << s.structure << ": " << fs.localized.size()
           << " classes\n";
      for (const auto& c : classes) {
        out_ << "  " << c["label"].get<std::string>() << " =";
        for (const auto& m : c["members"]) out_ << " " << m.get<std::string>();
        out_ << "\n";
      }
      out_ << "axioms=" << (axioms.passed() ? "pass" : "fail") << "\n";
      out_ << "zeroKernel=" << formatSet(a, fs.zeroKernel) << "\n";
      if (hasOne) out_ << "saturation=" << formatSet(a, saturate(fs)) << "\n";
    }
    return axioms.passed() ? kExitOk : kExitAxiom;
  }

  int verify() {
    CorpusConfig config;
    config.maxSize = opt_.maxSize;
    config.includeDefaults = !opt_.noDefaultCorpus;
    Corpus corpus = buildCorpus(config);
    std::map<std::string, std::size_t> index;
    for (const auto& [name, t] : env_.structures) {
      index[name] = corpus.add(name, t);
    }
    for (const auto& d : doc_.decls) {
      if (const auto* s = std::get_if<StructDecl>(&d)) {
        if (const auto* p = std::get_if<ProductBuilder>(&s->builder)) {
          corpus.products.push_back(
              {{index.at(p->left), index.at(p->right)}, index.at(s->name)});
        }
      } else if (const auto* h = std::get_if<HomDecl>(&d)) {
        const Homomorphism& hom = env_.homs.at(h->name);
        if (const auto c = checkHomomorphism(hom); !c) {
          throw StructureError(h->name + " is not a homomorphism: " +
                               c.explanation);
        }
        if (hom.injective()) {
          corpus.addHom(h->name, index.at(h->source), index.at(h->target),
                        hom.map);
        }
      }
    }
    const auto results = runSuite(corpus, opt_.suite);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed();
    if (opt_.json) {
      json structures = json::array();
      for (const auto& c : corpus.structures) {
        structures.push_back({{"name", c.name},
                              {"size", c.table().size()},
                              {"m", c.table().m()},
                              {"n", c.table().n()}});
      }
      json res = json::array();
      for (const auto& r : results) {
        json ces = json::array();
        for (const auto& b : r.counterexamples) {
          json bindings = json::object();
          for (const auto& [k, v] : b.values) bindings[k] = v;
          json ce{{"bindings", bindings}};
          if (!b.note.empty()) ce["note"] = b.note;
          ces.push_back(ce);
        }
        json entry{{"property", r.name},
                   {"statement", r.statement},
                   {"instances", r.instances},
                   {"skipped", r.skipped},
                   {"negativeControl", r.negativeControl},
                   {"counterexampleCount", r.counterexampleCount},
                   {"verdict", r.passed() ? "PASS" : "FAIL"},
                   {"counterexamples", ces}};
        if (!r.note.empty()) entry["note"] = r.note;
        res.push_back(entry);
      }
      emit({{"structures", structures}, {"results", res}});
    } else {
      for (const auto& r : results) {
        out_ << "PROP " << r.name << " INSTANCES " << r.instances << " "
             << (r.passed() ? "PASS" : "FAIL");
        if (r.counterexampleCount) {
          out_ << " counterexamples=" << r.counterexampleCount;
        }
        out_ << "\n";
        if (!r.note.empty()) out_ << "  note: " << r.note << "\n";
        if (!r.passed() || r.negativeControl) {
          for (const auto& b : r.counterexamples) {
            out_ << " ";
            for (const auto& [k, v] : b.values) out_ << " " << k << "=" << v;
            if (!b.note.empty()) out_ << " (" << b.note << ")";
            out_ << "\n";
          }
        }
      }
    }
    return ok ? kExitOk : kExitFalse;
  }

  const Document& doc_;
  const CommandOptions& opt_;
  std::ostream& out_;
  Elaboration env_;
};

}  // namespace

int execute(const Document& doc, const CommandOptions& options,
            std::ostream& out, std::ostream& err) {
  try {
    return Runner(doc, options, out).run();
  } catch (const DslError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const StructureError& e) {
    err << "axiom violation: " << e.what() << "\n";
    return kExitAxiom;
  } catch (const PreconditionError& e) {
    err << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

int runCli(const std::vector<std::string>& argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Finite Krasner (m,n)-hyperring toolkit"};
  app.name("krasner");
  app.require_subcommand(1);
  std::string file;
  CommandOptions opt;
  app.add_option("-f,--file", file, "Structure definition document");
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_option("--max-size", opt.maxSize, "Carrier size cap")
      ->check(CLI::Range(1, 64));

  auto* check = app.add_subcommand("check", "Verify the hyperring axioms");
  check->add_option("--structure", opt.structure, "Only this structure");
  auto* ideals = app.add_subcommand("ideals", "Enumerate hyperideals");
  ideals->add_option("--structure", opt.structure, "Only this structure");
  auto* radical = app.add_subcommand("radical", "Radical by both algorithms");
  radical->add_option("ideal", opt.args)->required()->expected(1);
  auto* classify = app.add_subcommand("classify", "Evaluate every predicate");
  classify->add_option("names", opt.args, "<ideal> <mulset>")
      ->required()
      ->expected(2);
  auto* localize = app.add_subcommand("localize", "Build S^-1 A");
  localize->add_option("mulset", opt.args)->required()->expected(1);
  auto* explain = app.add_subcommand("explain", "Trace one predicate scan");
  explain->add_option("names", opt.args, "<ideal> <mulset> <predicate>")
      ->required()
      ->expected(3);
  auto* verify = app.add_subcommand("verify", "Run the theorem suite");
  verify->add_option("--suite", opt.suite, "Property names")->delimiter(',');
  verify->add_flag("--no-default-corpus", opt.noDefaultCorpus,
                   "Use only the document's structures");
  for (auto* sub : {check, ideals, radical, classify, localize, explain, verify}) {
    sub->add_option("-f,--file", file, "Structure definition document");
    sub->add_flag("--json", opt.json, "Emit a JSON report");
    sub->add_option("--max-size", opt.maxSize, "Carrier size cap")
        ->check(CLI::Range(1, 64));
  }

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitParse;
  }
  opt.command = app.get_subcommands().front()->get_name();

  std::string text;
  if (!file.empty()) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      err << "error: cannot read " << file << "\n";
      return kExitParse;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  Document doc;
  try {
    doc = parse(text);
  } catch (const DslError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return execute(doc, opt, out, err);
}

}  // namespace krasner
