#include <algorithm>
#include <functional>

#include "herbrand/assemblies.hpp"
#include "herbrand/pca.hpp"
#include "herbrand/tripos.hpp"

namespace herbrand {

Assembly nabla(const LabelSet& x, const std::string& name) {
  std::map<Label, Antichain> alpha;
  for (const auto& a : x) alpha[a] = Antichain({SupportSet{Term::num(0)}});
  return Assembly::make(name, x, Domain::finite({Term::num(0)}), std::move(alpha));
}

LabelSet gamma(const Assembly& a) { return a.carrier; }

Ternary nabla_like(const Assembly& a, const Term& e) {
  if (!a.realizers.contains(e)) return Ternary::fails(e, e.str() + " is not a realizer of " + a.name);
  for (const auto& x : a.carrier)
    if (!a.at(x).covers(Term::seq({e}))) return Ternary::fails(e, "<" + e.str() + "> does not realize " + x);
  return Ternary::holds(true);
}

bool is_partitioned(const Assembly& a) {
  return std::all_of(a.carrier.begin(), a.carrier.end(), [&](const Label& x) {
    const auto& ms = a.at(x).members();
    return ms.size() == 1 && ms.front().size() == 1;
  });
}

std::optional<Term> partition_generator(const Assembly& a, const Label& x) {
  const auto& ms = a.at(x).members();
  if (ms.size() == 1 && ms.front().size() == 1) return ms.front().front();
  return std::nullopt;
}

Product partitioned_product(const Assembly& a, const Assembly& b, const CheckConfig& cfg) {
  if (!is_partitioned(a) || !is_partitioned(b)) throw InvalidAssembly("partitioned product of unpartitioned assemblies");
  Product out;
  out.tensor = true;
  std::vector<Label> labels;
  std::map<Label, Antichain> gamma;
  std::map<Label, Label> p, q;
  for (const auto& x : a.carrier)
    for (const auto& y : b.carrier) {
      Label l = pair_label(x, y);
      labels.push_back(l);
      out.components[l] = {x, y};
      p[l] = x;
      q[l] = y;
      gamma[l] = Antichain({SupportSet{Term::pair(*partition_generator(a, x), *partition_generator(b, y))}});
    }
  out.object = Assembly::make(a.name + "(x)" + b.name, make_labels(labels), Domain::tensor(a.realizers, b.realizers),
                              std::move(gamma));
  auto each = [](Prim side) { return lambda({"m"}, ap(Term::prim(Prim::Map), {Term::prim(side), v("m")})); };
  out.fst = make_morphism(out.object, a, FunctionTable(out.object.carrier, a.carrier, p), each(Prim::Fst), cfg);
  out.snd = make_morphism(out.object, b, FunctionTable(out.object.carrier, b.carrier, q), each(Prim::Snd), cfg);
  return out;
}

Cover partitioned_cover(const Assembly& a, const CheckConfig& cfg) {
  std::vector<Label> labels;
  std::map<Label, Antichain> alpha;
  std::map<Label, Label> proj;
  std::vector<Term> all_codes;
  for (const auto& x : a.carrier)
    for (const auto& g : a.at(x).members()) {
      Term n = code_of(g);
      Label l = x + "|" + n.str();
      labels.push_back(l);
      alpha[l] = Antichain({SupportSet{n}});
      proj[l] = x;
      all_codes.push_back(n);
    }
  Cover out;
  out.object = Assembly::make(a.name + "'", make_labels(labels), Domain::bang(a.realizers), std::move(alpha));
  out.projection =
      make_morphism(out.object, a, FunctionTable(out.object.carrier, a.carrier, proj), Term::prim(Prim::Cat), cfg);
  out.super_epi_witness = Term::app(Term::K(), code_of(make_support(std::move(all_codes))));
  return out;
}

Retract retract_partitioned(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg) {
  const Assembly& a = f.source;
  const Assembly& b = f.target;
  if (!(g.source == b) || !(g.target == a)) throw InvalidAssembly("retraction maps do not match");
  if (compose(g.map, f.map) != FunctionTable::identity(a.carrier)) throw Error("g f is not the identity");
  if (!is_partitioned(b)) throw InvalidAssembly("retract of an unpartitioned assembly");
  std::map<Label, Antichain> alpha;
  for (const auto& x : a.carrier) alpha[x] = b.at(f(x));
  Retract out;
  out.object = Assembly::make(a.name + "'", a.carrier, b.realizers, std::move(alpha));
  FunctionTable id = FunctionTable::identity(a.carrier);
  out.to = make_morphism(a, out.object, id, f.tracking, cfg);
  out.from = make_morphism(out.object, a, id, g.tracking, cfg);
  return out;
}

Term section_tracking(const Term& r) { return exists_transpose_up(exists_transpose_down(r)); }

SectionResult section_of_cover(const AsmMorphism& p, const Term& r, const CheckConfig& cfg) {
  const Assembly& b = p.source;
  const Assembly& a = p.target;
  if (!is_partitioned(a)) throw InvalidAssembly("section onto an unpartitioned assembly");
  std::map<Label, Label> t;
  for (const auto& x : a.carrier) {
    Term in = Term::seq({*partition_generator(a, x)});
    EvalResult out = apply(r, in, cfg.fuel);
    if (out.diverged()) return {std::nullopt, Ternary::unknown(Ternary::Reason::Fuel, "no value at " + x)};
    if (out.stuck()) return {std::nullopt, Ternary::fails(in, "witness undefined at " + x + ": " + out.reason)};
    auto fib = p.map.fiber(x);
    auto hit = std::find_if(fib.begin(), fib.end(), [&](const Label& y) { return b.realizes(y, out.value); });
    if (hit == fib.end())
      return {std::nullopt, Ternary::fails(in, "no point over " + x + " is realized by " + out.value.str())};
    t[x] = *hit;
  }
  AsmMorphism s = make_morphism(a, b, FunctionTable(a.carrier, b.carrier, t), section_tracking(r), cfg);
  if (compose(p.map, s.map) != FunctionTable::identity(a.carrier))
    return {std::nullopt, Ternary::fails(Term::seq(), "not a section")};
  Ternary v = s.status;
  return {std::move(s), v};
}

// ---------------------------------------------------------------------------

bool PreservationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedVerdict& c) { return c.verdict.is_holds(); });
}

namespace {

FunctionTable same_labels(const LabelSet& from, const LabelSet& to) {
  std::map<Label, Label> t;
  for (const auto& x : from) t[x] = x;
  return FunctionTable(from, to, t);
}

Ternary same_points(const Assembly& lhs, const Assembly& rhs, const CheckConfig& cfg) {
  if (lhs.carrier != rhs.carrier) return Ternary::fails(Term::seq(), "carriers differ");
  return isomorphic_via(lhs, rhs, same_labels(lhs.carrier, rhs.carrier), cfg);
}

}  // namespace

PreservationReport pretopos_preservation_suite(const LabelSet& x, const LabelSet& y, const CheckConfig& cfg) {
  if (x.empty() || y.empty()) throw Error("preservation suite needs nonempty sets");
  PreservationReport rep;
  Assembly nx = nabla(x, "X"), ny = nabla(y, "Y");

  rep.checks.push_back({"terminal", same_points(nabla({"*"}), terminal(), cfg)});
  rep.checks.push_back({"initial", same_points(nabla({}), initial(), cfg)});

  std::vector<Label> xy, xpy;
  for (const auto& a : x)
    for (const auto& b : y) xy.push_back(pair_label(a, b));
  for (const auto& a : x) xpy.push_back(inl_label(a));
  for (const auto& b : y) xpy.push_back(inr_label(b));
  rep.checks.push_back({"product", same_points(nabla(make_labels(xy)), product(nx, ny, cfg).object, cfg)});
  rep.checks.push_back({"sum", same_points(nabla(make_labels(xpy)), sum(nx, ny, cfg).object, cfg)});

  // A constant map and a "round robin" map X → Y give a nontrivial parallel pair.
  std::map<Label, Label> ct, rr;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ct[x[i]] = y.front();
    rr[x[i]] = y[i % y.size()];
  }
  FunctionTable f(x, y, ct), g(x, y, rr);
  AsmMorphism nf = make_morphism(nx, ny, f, std::nullopt, cfg);
  AsmMorphism ng = make_morphism(nx, ny, g, std::nullopt, cfg);

  std::vector<Label> eq;
  for (const auto& a : x)
    if (f(a) == g(a)) eq.push_back(a);
  rep.checks.push_back({"equalizer", same_points(nabla(make_labels(eq)), equalizer(nf, ng, cfg).object, cfg)});

  // Set-level quotient of Y by f(a) ~ g(a), classes named by their least member.
  std::map<Label, Label> cls;
  for (const auto& b : y) cls[b] = b;
  std::function<Label(const Label&)> root = [&](const Label& b) { return cls[b] == b ? b : root(cls[b]); };
  for (const auto& a : x) {
    Label p = root(f(a)), q = root(g(a));
    if (p != q) cls[std::max(p, q)] = std::min(p, q);
  }
  std::vector<Label> reps;
  for (const auto& b : y)
    if (root(b) == b) reps.push_back(b);
  rep.checks.push_back({"coequalizer", same_points(nabla(make_labels(reps)), coequalizer(nf, ng, cfg).object, cfg)});

  // Y^X as Π along X → 1 of the projection X × Y → X.
  Product prod = product(nx, ny, cfg);
  Pi pi = pi_along(to_terminal(nx, cfg), prod.fst, cfg);
  std::vector<Label> funs;
  std::map<Label, Label> to_fun;
  for (const auto& fun : all_functions(x, y)) funs.push_back(fun.str());
  for (std::size_t i = 0; i < pi.object.carrier.size(); ++i) {
    std::map<Label, Label> t;
    for (const auto& [a, s] : pi.sections[i].section) t[a] = prod.components.at(s).second;
    to_fun[pi.object.carrier[i]] = FunctionTable(x, y, t).str();
  }
  LabelSet fun_set = make_labels(funs);
  Ternary exp_check = pi.object.carrier.size() != fun_set.size()
                          ? Ternary::fails(Term::seq(), "wrong number of tracked sections")
                          : isomorphic_via(pi.object, nabla(fun_set), FunctionTable(pi.object.carrier, fun_set, to_fun), cfg);
  rep.checks.push_back({"function set", exp_check});
  return rep;
}

}  // namespace herbrand
