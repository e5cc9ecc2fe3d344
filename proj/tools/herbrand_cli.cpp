#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "herbrand/assemblies.hpp"
#include "herbrand/pca.hpp"
#include "herbrand/sexpr.hpp"
#include "herbrand/suites.hpp"
#include "herbrand/tripos.hpp"

using namespace herbrand;

namespace {

struct RunConfig {
  std::uint64_t fuel = 10000;
  std::size_t probe_len = 2;
  std::size_t nmax = kDefaultNmax;
  std::string format = "text";

  CheckConfig check() const {
    CheckConfig c;
    c.fuel = Fuel{fuel};
    c.probes.max_len = probe_len;
    return c;
  }
  bool structured() const { return format == "structured"; }
};

constexpr int kMalformed = 3;

int exit_code(const Ternary& t) {
  switch (t.kind()) {
    case Ternary::Kind::Holds: return 0;
    case Ternary::Kind::Fails: return 1;
    case Ternary::Kind::Unknown: return 2;
  }
  return 2;
}

/// Contents of the file when `arg` names one, otherwise `arg` itself.
std::string text_of(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string quoted(const std::string& v) {
  bool plain = !v.empty() && v.find_first_of(" \t\"\\=") == std::string::npos;
  if (plain) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

/// One line of `key=value` pairs.
class Record {
public:
  explicit Record(std::string kind) { add("record", std::move(kind)); }
  Record& add(const std::string& k, const std::string& v) {
    line_ += (line_.empty() ? "" : " ") + k + "=" + quoted(v);
    return *this;
  }
  Record& verdict(const Ternary& t) {
    add("verdict", t.is_holds() ? "holds" : t.is_fails() ? "fails" : "unknown");
    if (t.is_holds()) add("exact", t.exact() ? "true" : "false");
    if (t.is_unknown()) add("reason", std::string(to_string(t.reason())));
    if (t.witness()) add("witness", t.witness()->str());
    if (!t.note().empty()) add("note", t.note());
    return *this;
  }
  const std::string& str() const { return line_; }

private:
  std::string line_;
};

void emit(const RunConfig& rc, const Record& structured, const std::string& text) {
  std::cout << (rc.structured() ? structured.str() : text) << '\n';
}

// ---------------------------------------------------------------------------

int cmd_eval(const RunConfig& rc, const std::string& input) {
  Term t = parse_term(text_of(input));
  EvalResult r = normalize(t, Fuel{rc.fuel});
  Record rec("eval");
  rec.add("steps", std::to_string(r.steps));
  if (r.ok()) {
    rec.add("status", "value").add("value", r.value.str());
    emit(rc, rec, r.value.str());
    return 0;
  }
  if (r.diverged()) {
    rec.add("status", "diverged");
    emit(rc, rec, "Diverged after " + std::to_string(r.steps) + " steps");
    return 2;
  }
  rec.add("status", "stuck").add("reason", r.reason);
  emit(rc, rec, "Stuck after " + std::to_string(r.steps) + " steps: " + r.reason);
  return 1;
}

int cmd_check_entailment(const RunConfig& rc, const std::vector<std::string>& inputs, const std::string& realizer) {
  if (inputs.size() != 2) throw ParseError("entailment needs two predicate inputs", 0);
  Predicate phi = parse_predicate(text_of(inputs[0]));
  Predicate psi = parse_predicate(text_of(inputs[1]));
  Term r = parse_term(text_of(realizer));
  EntailmentReport rep = check_entailment(phi, psi, r, rc.check());
  for (const auto& p : rep.transcript) {
    Record rec("probe");
    rec.add("index", p.index).add("clause", p.clause).add("input", p.input.str());
    rec.add("output", p.output ? p.output->str() : "-").verdict(p.verdict);
    emit(rc, rec,
         "  " + p.index + " " + p.clause + " " + p.input.str() + " -> " + (p.output ? p.output->str() : "-") + "  " +
             p.verdict.str());
  }
  Ternary v = rep.verdict();
  Record rec("entailment");
  rec.add("realizer", r.str());
  if (rep.index) rec.add("index", *rep.index);
  rec.verdict(v);
  emit(rc, rec, "entailment: " + v.str() + (rep.index ? " at " + *rep.index : std::string{}));
  return exit_code(v);
}

struct Objects {
  std::map<std::string, Assembly> assemblies;
  std::vector<std::pair<std::string, AsmMorphism>> morphisms;

  const Assembly& assembly(const std::string& n) const {
    auto it = assemblies.find(n);
    if (it == assemblies.end()) throw ParseError("unknown assembly " + n, 0);
    return it->second;
  }
  const AsmMorphism& morphism(const std::string& n) const {
    for (const auto& [name, m] : morphisms)
      if (name == n) return m;
    throw ParseError("unknown morphism " + n, 0);
  }
};

Objects load_objects(const std::vector<std::string>& inputs, const CheckConfig& cfg) {
  Objects o;
  for (const auto& in : inputs) {
    for (const auto& e : read_sexprs(text_of(in))) {
      if (e.head_is("assembly")) {
        Assembly a = assembly_from_sexpr(e);
        o.assemblies.insert_or_assign(a.name, a);
      } else if (e.head_is("morphism")) {
        o.morphisms.emplace_back(e.list[1].atom, morphism_from_sexpr(e, o.assemblies, cfg));
      } else {
        throw ParseError("expected (assembly …) or (morphism …)", e.offset);
      }
    }
  }
  return o;
}

int cmd_check_tracking(const RunConfig& rc, const std::vector<std::string>& inputs) {
  Objects o = load_objects(inputs, rc.check());
  if (o.morphisms.empty()) throw ParseError("no morphism to check", 0);
  Ternary all = Ternary::holds(true);
  for (const auto& [name, m] : o.morphisms) {
    Ternary v = check_tracking(m, rc.check());
    Record rec("tracking");
    rec.add("morphism", name).add("tracking", m.tracking.str()).verdict(v);
    emit(rc, rec, name + ": " + v.str());
    all = both(all, v);
  }
  return exit_code(all);
}

Term synth_term(const std::string& name, const std::vector<Term>& a) {
  auto need = [&](std::size_t n) {
    if (a.size() != n) throw ParseError(name + " takes " + std::to_string(n) + " term argument(s)", 0);
  };
  static const std::map<std::string, Term (*)()> nullary{
      {"identity", synth_identity},       {"top-intro", synth_top_intro}, {"bottom-elim", synth_bottom_elim},
      {"conj-fst", synth_conj_fst},       {"conj-snd", synth_conj_snd},   {"disj-inl", synth_disj_inl},
      {"disj-inr", synth_disj_inr},       {"eval", synth_eval},           {"wlem", wlem_realizer},
      {"pi-evaluation", pi_evaluation_realizer}};
  static const std::map<std::string, Term (*)(const Term&)> unary{
      {"curry", synth_curry},
      {"uncurry", synth_uncurry},
      {"exists-down", exists_transpose_down},
      {"exists-up", exists_transpose_up},
      {"forall-up", forall_transpose_up},
      {"forall-down", forall_transpose_down},
      {"section", section_tracking},
      {"lift", lift_to_codes},
      {"bound-term", tracking_from_bound_term}};
  if (auto it = nullary.find(name); it != nullary.end()) {
    need(0);
    return it->second();
  }
  if (auto it = unary.find(name); it != unary.end()) {
    need(1);
    return it->second(a[0]);
  }
  if (name == "compose") {
    need(2);
    return synth_compose(a[0], a[1]);
  }
  if (name == "conj-pair") {
    need(2);
    return synth_conj_pair(a[0], a[1]);
  }
  if (name == "disj-elim") {
    need(2);
    return synth_disj_elim(a[0], a[1]);
  }
  throw ParseError("unknown synthesizer " + name, 0);
}

int cmd_synth(const RunConfig& rc, const std::string& name, const std::vector<std::string>& args,
              const std::string& out) {
  Term t = Term::seq();
  if (name == "bound") {
    std::vector<std::uint64_t> g;
    for (const auto& s : args) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.empty() || s.front() == '-') throw ParseError("bound table entry " + s, 0);
      g.push_back(v);
    }
    if (g.empty()) throw ParseError("bound needs a table", 0);
    t = tracking_from_bound(g);
  } else {
    std::vector<Term> terms;
    for (const auto& s : args) terms.push_back(parse_term(text_of(s)));
    t = synth_term(name, terms);
  }
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << t.str() << '\n';
  }
  Record rec("synth");
  rec.add("name", name).add("term", t.str());
  if (!out.empty()) rec.add("file", out);
  emit(rc, rec, t.str());
  return 0;
}

void show_object(const RunConfig& rc, const std::string& role, const Assembly& a) {
  Record rec("assembly");
  rec.add("role", role).add("text", a.str());
  emit(rc, rec, a.str());
}

Ternary show_morphism(const RunConfig& rc, const std::string& name, const AsmMorphism& m) {
  Record rec("morphism");
  rec.add("name", name).add("text", morphism_text(name, m)).verdict(m.status);
  emit(rc, rec, morphism_text(name, m) + "  ; " + m.status.str());
  return m.status;
}

int cmd_assembly(const RunConfig& rc, const std::string& op, const std::vector<std::string>& names,
                 const std::vector<std::string>& inputs) {
  CheckConfig cfg = rc.check();
  Objects o = load_objects(inputs, cfg);
  auto need = [&](std::size_t n) {
    if (names.size() != n) throw ParseError(op + " takes " + std::to_string(n) + " name(s)", 0);
  };
  auto named = [](Assembly a, std::string n) {
    a.name = std::move(n);
    return a;
  };
  Ternary all = Ternary::holds(true);
  auto morph = [&](const std::string& n, const AsmMorphism& m) { all = both(all, show_morphism(rc, n, m)); };

  if (op == "show") {
    need(1);
    show_object(rc, "object", o.assembly(names[0]));
  } else if (op == "terminal") {
    need(0);
    show_object(rc, "object", terminal());
  } else if (op == "initial") {
    need(0);
    show_object(rc, "object", initial());
  } else if (op == "nno") {
    need(0);
    show_object(rc, "object", nno(rc.nmax));
  } else if (op == "product" || op == "partitioned-product") {
    need(2);
    const Assembly &a = o.assembly(names[0]), &b = o.assembly(names[1]);
    Product p = op == "product" ? product(a, b, cfg) : partitioned_product(a, b, cfg);
    show_object(rc, "object", named(p.object, a.name + "x" + b.name));
    morph("fst", p.fst);
    morph("snd", p.snd);
  } else if (op == "sum") {
    need(2);
    const Assembly &a = o.assembly(names[0]), &b = o.assembly(names[1]);
    Sum s = sum(a, b, cfg);
    show_object(rc, "object", named(s.object, a.name + "+" + b.name));
    morph("inl", s.inl);
    morph("inr", s.inr);
  } else if (op == "equalizer") {
    need(2);
    Equalizer e = equalizer(o.morphism(names[0]), o.morphism(names[1]), cfg);
    show_object(rc, "object", e.object);
    morph("inclusion", e.inclusion);
  } else if (op == "coequalizer") {
    need(2);
    Coequalizer q = coequalizer(o.morphism(names[0]), o.morphism(names[1]), cfg);
    show_object(rc, "object", q.object);
    morph("quotient", q.quotient);
  } else if (op == "pullback") {
    need(2);
    Pullback p = pullback(o.morphism(names[0]), o.morphism(names[1]), cfg);
    show_object(rc, "object", p.object);
    morph("left", p.left);
    morph("right", p.right);
  } else if (op == "factorize") {
    need(1);
    const AsmMorphism& f = o.morphism(names[0]);
    Factorization fa = factorize(f, cfg);
    show_object(rc, "image", fa.image);
    morph("super_epi", fa.super_epi);
    morph("mono", fa.mono);
    Ternary se = is_super_epi(fa.super_epi, fa.super_epi_witness, cfg);
    Record rec("super-epi");
    rec.add("witness", fa.super_epi_witness.str()).verdict(se);
    emit(rc, rec, "super-epi witness " + fa.super_epi_witness.str() + ": " + se.str());
    all = both(all, se);
  } else if (op == "pi") {
    need(2);
    Pi p = pi_along(o.morphism(names[0]), o.morphism(names[1]), cfg);
    show_object(rc, "object", p.object);
    morph("structure", p.structure);
    morph("evaluation", p.evaluation);
  } else if (op == "cover") {
    need(1);
    Cover c = partitioned_cover(o.assembly(names[0]), cfg);
    show_object(rc, "object", c.object);
    morph("projection", c.projection);
    Ternary se = is_super_epi(c.projection, c.super_epi_witness, cfg);
    Record rec("super-epi");
    rec.add("witness", c.super_epi_witness.str()).verdict(se);
    emit(rc, rec, "super-epi witness " + c.super_epi_witness.str() + ": " + se.str());
    all = both(all, se);
  } else if (op == "nabla") {
    need(1);
    const Assembly& a = o.assembly(names[0]);
    show_object(rc, "object", nabla(gamma(a), "nabla_" + a.name));
  } else {
    throw ParseError("unknown construction " + op, 0);
  }
  return exit_code(all);
}

int cmd_demo(const RunConfig& rc, const std::string& name, std::uint32_t seed, std::size_t pairs,
             const std::string& bar_file) {
  CheckConfig cfg = rc.check();
  SuiteReport rep;
  if (name == "heyting-laws")
    rep = heyting_suite(pairs, seed, cfg);
  else if (name == "wlem")
    rep = wlem_suite(cfg);
  else if (name == "bounded")
    rep = bounded_suite(16, seed, cfg);
  else if (name == "koenig")
    rep = koenig_suite(4, cfg);
  else if (name == "pretopos")
    rep = pretopos_suite(2, 2, cfg);
  else if (name == "fan")
    rep = fan_suite(bar_file.empty() ? length_bar(3, 3, 3) : bar_from_sexpr(read_sexpr(text_of(bar_file))));
  else
    throw ParseError("unknown demo " + name, 0);

  for (const auto& [what, v] : rep.records) {
    if (!rc.structured() && v.is_holds() && rep.records.size() > 20) continue;
    Record rec("check");
    rec.add("suite", rep.name).add("name", what).verdict(v);
    emit(rc, rec, "  " + what + ": " + v.str());
  }
  Record rec("suite");
  rec.add("name", rep.name)
      .add("passed", std::to_string(rep.passed))
      .add("failed", std::to_string(rep.failed))
      .add("unknown", std::to_string(rep.unknown));
  emit(rc, rec,
       rep.name + ": " + std::to_string(rep.passed) + " passed, " + std::to_string(rep.failed) + " failed, " +
           std::to_string(rep.unknown) + " unknown");
  if (rep.failed) return 1;
  return rep.unknown ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability toolkit over the combinatory algebra of sequence codes"};
  app.require_subcommand(1);
  RunConfig rc;
  app.add_option("--fuel", rc.fuel, "Reduction step budget")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--probe-len", rc.probe_len, "Longest probe code")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--nmax", rc.nmax, "Truncation of the natural numbers object")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", rc.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string eval_input;
  auto* eval = app.add_subcommand("eval", "Normalize a term");
  eval->add_option("term", eval_input, "Term text or file")->required();

  std::string kind, realizer;
  std::vector<std::string> check_inputs;
  auto* check = app.add_subcommand("check", "Check an entailment or the trackings of morphisms");
  check->add_option("kind", kind)->required()->check(CLI::IsMember({"entailment", "tracking"}));
  check->add_option("inputs", check_inputs, "Predicate, assembly or morphism files")->required();
  check->add_option("-r,--realizer", realizer, "Realizer term text or file (entailment)");

  std::string synth_name, synth_out;
  std::vector<std::string> synth_args;
  auto* synth = app.add_subcommand("synth", "Emit a synthesized realizer term");
  synth->add_option("name", synth_name)->required();
  synth->add_option("args", synth_args, "Argument terms, or the table for `bound`");
  synth->add_option("-o,--output", synth_out, "File to write the term to");

  std::string op;
  std::vector<std::string> asm_names, asm_inputs;
  auto* assembly = app.add_subcommand("assembly", "Build a construction on assemblies read from files");
  assembly->add_option("construction", op)->required();
  assembly->add_option("names", asm_names, "Assemblies or morphisms it is applied to");
  assembly->add_option("-i,--input", asm_inputs, "Files of (assembly …) and (morphism …) forms");

  std::string demo_name, bar_file;
  std::uint32_t seed = 1;
  std::size_t pairs = 200;
  auto* demo = app.add_subcommand("demo", "Run a demonstration suite");
  demo->add_option("name", demo_name)
      ->required()
      ->check(CLI::IsMember({"wlem", "fan", "koenig", "bounded", "heyting-laws", "pretopos"}));
  demo->add_option("--seed", seed)->capture_default_str();
  demo->add_option("--pairs", pairs, "Predicate pairs for heyting-laws")->capture_default_str();
  demo->add_option("--bar", bar_file, "Bar file for fan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc_exit = app.exit(e);
    return rc_exit == 0 ? 0 : kMalformed;
  }

  try {
    if (*eval) return cmd_eval(rc, eval_input);
    if (*check) {
      if (kind == "entailment") {
        if (realizer.empty()) throw ParseError("entailment needs --realizer", 0);
        return cmd_check_entailment(rc, check_inputs, realizer);
      }
      return cmd_check_tracking(rc, check_inputs);
    }
    if (*synth) return cmd_synth(rc, synth_name, synth_args, synth_out);
    if (*assembly) return cmd_assembly(rc, op, asm_names, asm_inputs);
    if (*demo) return cmd_demo(rc, demo_name, seed, pairs, bar_file);
  } catch (const Undecidable& e) {
    std::cerr << "unknown: " << e.what() << '\n';
    return 2;
  } catch (const Unsupported& e) {
    std::cerr << "unknown: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return kMalformed;
}
