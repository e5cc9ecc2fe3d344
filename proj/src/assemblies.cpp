#include "herbrand/assemblies.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "herbrand/pca.hpp"
#include "herbrand/sexpr.hpp"
#include "herbrand/tripos.hpp"

namespace herbrand {

namespace {

SupportSet tagged(std::uint64_t side, const SupportSet& g) {
  SupportSet out;
  for (const auto& x : g) out.push_back(tag(side, x));
  return out;
}

SupportSet joined(const SupportSet& a, const SupportSet& b) {
  SupportSet out = tagged(0, a);
  auto r = tagged(1, b);
  out.insert(out.end(), r.begin(), r.end());
  return make_support(std::move(out));
}

std::optional<Term> constant_value(const Term& c) {
  if (c.is(Term::Kind::App) && c.fun().is(Term::Kind::K)) return c.arg();
  return std::nullopt;
}

const Term& identity_nf() {
  static const Term t = normal_form(I());
  return t;
}

Term P(Prim p) { return Term::prim(p); }

Term left_of(const Term& m) { return ap(P(Prim::Fst), {Term::app(exp_iso().first, m)}); }
Term right_of(const Term& m) { return ap(P(Prim::Snd), {Term::app(exp_iso().first, m)}); }

void push_unique(std::vector<Term>& out, std::unordered_set<Term>& seen, const Term& t) {
  if (seen.insert(t).second) out.push_back(t);
}

/// Codes standing in for !𝒜 of an assembly: generic ones plus those near
/// each α(a).
std::vector<Term> potential_inputs(const Assembly& a, const ProbeConfig& cfg) {
  std::vector<Term> out;
  std::unordered_set<Term> seen;
  for (const auto& m : potential_probes(TruthValue::atom(a.realizers, Antichain{}), cfg)) push_unique(out, seen, m);
  for (const auto& x : a.carrier)
    for (const auto& m : potential_probes(a.value(x), cfg)) push_unique(out, seen, m);
  return out;
}

/// Exact answer to "𝒜 ⊆ ℬ" where one is available.
std::optional<bool> realizers_within(const Domain& a, const Domain& b) {
  if (a == b || b.is_all()) return true;
  if (a.is_finite())
    return std::all_of(a.elements().begin(), a.elements().end(), [&](const Term& x) { return b.contains(x); });
  return std::nullopt;
}

Assembly restrict(const Assembly& a, const LabelSet& subset, std::string name) {
  std::map<Label, Antichain> alpha;
  for (const auto& x : subset) alpha[x] = a.at(x);
  return Assembly::make(std::move(name), subset, a.realizers, std::move(alpha));
}

void require_same(const Assembly& x, const Assembly& y, const std::string& what) {
  if (!(x == y)) throw InvalidAssembly(what + ": assemblies " + x.name + " and " + y.name + " differ");
}

Ternary outcome(const EvalResult& r, const Term& input, const std::string& where) {
  if (r.diverged()) return Ternary::unknown(Ternary::Reason::Fuel, "no value on " + input.str() + where);
  return Ternary::fails(input, "undefined on " + input.str() + where + ": " + r.reason);
}

}  // namespace

// ---------------------------------------------------------------------------

Assembly Assembly::make(std::string name, LabelSet carrier, Domain realizers, std::map<Label, Antichain> alpha) {
  if (make_labels(carrier) != carrier) throw InvalidAssembly("carrier of " + name + " is not a sorted set of labels");
  if (alpha.size() != carrier.size()) throw InvalidAssembly("alpha of " + name + " is not defined exactly on the carrier");
  for (const auto& x : carrier) {
    auto it = alpha.find(x);
    if (it == alpha.end()) throw InvalidAssembly("alpha of " + name + " is undefined at " + x);
    if (it->second.empty()) throw InvalidAssembly("alpha(" + x + ") of " + name + " is empty");
    for (const auto& g : it->second.members())
      if (!realizers.subset_contains(g))
        throw InvalidAssembly("a generator of alpha(" + x + ") of " + name + " leaves " + realizers.str());
  }
  Assembly a;
  a.name = std::move(name);
  a.carrier = std::move(carrier);
  a.realizers = std::move(realizers);
  a.alpha = std::move(alpha);
  return a;
}

const Antichain& Assembly::at(const Label& a) const {
  auto it = alpha.find(a);
  if (it == alpha.end()) throw InvalidAssembly("no point " + a + " in " + name);
  return it->second;
}

TruthValue Assembly::value(const Label& a) const { return TruthValue::atom(realizers, at(a)); }

bool Assembly::realizes(const Label& a, const Term& m) const {
  return realizers.contains_code(m) && at(a).covers(m);
}

std::string Assembly::str() const {
  std::ostringstream os;
  os << "(assembly " << quote_atom(name.empty() ? "A" : name) << ' ' << labels_str("carrier", carrier) << " (domain "
     << realizers.str() << ") (alpha";
  for (const auto& x : carrier) os << " (" << quote_atom(x) << ' ' << at(x).str() << ')';
  os << "))";
  return os.str();
}

std::string AsmMorphism::str() const { return morphism_text("f", *this); }

Label pair_label(const Label& a, const Label& b) { return "(" + a + "," + b + ")"; }
Label inl_label(const Label& a) { return "inl(" + a + ")"; }
Label inr_label(const Label& b) { return "inr(" + b + ")"; }

// ---------------------------------------------------------------------------
// Tracking

namespace {

/// The identity tracks f iff 𝒜 ⊆ ℬ and each generator of α(a) is covered
/// by β(f a). Decided when 𝒜 ⊆ ℬ is.
std::optional<Ternary> identity_tracks(const Assembly& src, const Assembly& tgt, const FunctionTable& f) {
  auto within = realizers_within(src.realizers, tgt.realizers);
  if (!within) return std::nullopt;
  if (!*within) {
    for (const auto& x : src.realizers.elements())
      if (!tgt.realizers.contains(x))
        return Ternary::fails(Term::seq({x}), "element " + x.str() + " is outside the target realizers");
  }
  for (const auto& x : src.carrier)
    for (const auto& g : src.at(x).members())
      if (!tgt.at(f(x)).covers_support(g))
        return Ternary::fails(code_of(g), "at " + x + " the identity leaves alpha(" + f(x) + ")");
  return Ternary::holds(true);
}

}  // namespace

Ternary check_tracking(const Assembly& src, const Assembly& tgt, const FunctionTable& f, const Term& n,
                       const CheckConfig& cfg) {
  if (f.domain() != src.carrier || f.codomain() != tgt.carrier)
    throw InvalidAssembly("function does not run from " + src.name + " to " + tgt.name);
  EvalResult nr = normalize(n, cfg.fuel);
  if (nr.diverged()) return Ternary::unknown(Ternary::Reason::Fuel, "tracking has no normal form");
  if (nr.stuck()) return Ternary::fails(n, "tracking is not an element: " + nr.reason);
  const Term& t = nr.value;

  if (t == identity_nf())
    if (auto r = identity_tracks(src, tgt, f)) return *r;

  if (auto value = constant_value(t)) {
    if (!tgt.realizers.contains_code(*value))
      return Ternary::fails(Term::seq(), "constant " + value->str() + " is outside !" + tgt.realizers.str());
    for (const auto& x : src.carrier)
      if (!tgt.at(f(x)).covers(*value))
        return Ternary::fails(code_of(src.at(x).members().front()),
                              "at " + x + " gives " + value->str() + ", outside alpha(" + f(x) + ")");
    return Ternary::holds(true);
  }

  Ternary acc = Ternary::holds(false);
  for (const auto& m : potential_inputs(src, cfg.probes)) {
    EvalResult r = apply(t, m, cfg.fuel);
    if (!r.ok()) {
      Ternary o = outcome(r, m, "");
      if (o.is_fails()) return o;
      acc = both(acc, o);
      continue;
    }
    if (!tgt.realizers.contains_code(r.value))
      return Ternary::fails(m, "gives " + r.value.str() + ", outside !" + tgt.realizers.str());
  }
  for (const auto& x : src.carrier)
    for (const auto& m : actual_probes(src.value(x), cfg.probes)) {
      EvalResult r = apply(t, m, cfg.fuel);
      if (!r.ok()) {
        Ternary o = outcome(r, m, " at " + x);
        if (o.is_fails()) return o;
        acc = both(acc, o);
        continue;
      }
      if (!tgt.realizes(f(x), r.value))
        return Ternary::fails(m, "at " + x + " gives " + r.value.str() + ", outside alpha(" + f(x) + ")");
    }
  return acc.probe_level();
}

Ternary check_tracking(const AsmMorphism& f, const CheckConfig& cfg) {
  return check_tracking(f.source, f.target, f.map, f.tracking, cfg);
}

std::optional<Term> synthesize_tracking(const Assembly& src, const Assembly& tgt, const FunctionTable& f,
                                        const CheckConfig& cfg) {
  if (auto r = identity_tracks(src, tgt, f); r && r->is_holds()) return I();
  std::vector<Term> elems;
  for (const auto& x : src.carrier) {
    const auto& g = tgt.at(f(x)).members().front();
    elems.insert(elems.end(), g.begin(), g.end());
  }
  Term c = Term::app(Term::K(), code_of(make_support(std::move(elems))));
  if (check_tracking(src, tgt, f, c, cfg).is_holds()) return c;
  return std::nullopt;
}

AsmMorphism make_morphism(const Assembly& src, const Assembly& tgt, const FunctionTable& f,
                          std::optional<Term> tracking, const CheckConfig& cfg) {
  AsmMorphism m{src, tgt, f};
  if (!tracking) tracking = synthesize_tracking(src, tgt, f, cfg);
  m.tracking = tracking ? *tracking : I();
  m.status = check_tracking(m, cfg);
  return m;
}

AsmMorphism identity(const Assembly& a) {
  AsmMorphism m{a, a, FunctionTable::identity(a.carrier), I(), Ternary::holds(true)};
  return m;
}

AsmMorphism compose(const AsmMorphism& g, const AsmMorphism& f, const CheckConfig& cfg) {
  require_same(f.target, g.source, "compose");
  Term t = synth_compose(f.tracking, g.tracking);
  auto ng = normalize(g.tracking, cfg.fuel);
  auto nf = normalize(f.tracking, cfg.fuel);
  if (ng.ok() && (constant_value(ng.value) || (nf.ok() && nf.value == identity_nf())))
    t = g.tracking;
  else if (ng.ok() && ng.value == identity_nf())
    t = f.tracking;
  return make_morphism(f.source, g.target, compose(g.map, f.map), t, cfg);
}

Ternary check_iso(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg) {
  Ternary t = both(check_tracking(f, cfg), check_tracking(g, cfg));
  if (t.is_fails()) return t;
  if (!(f.source == g.target) || !(f.target == g.source))
    return Ternary::fails(Term::seq(), "maps do not run between the same assemblies");
  if (compose(g.map, f.map) != FunctionTable::identity(f.source.carrier) ||
      compose(f.map, g.map) != FunctionTable::identity(f.target.carrier))
    return Ternary::fails(Term::seq(), "maps are not mutually inverse");
  return t;
}

Ternary isomorphic_via(const Assembly& a, const Assembly& b, const FunctionTable& bijection, const CheckConfig& cfg) {
  if (!bijection.injective() || !bijection.surjective())
    return Ternary::fails(Term::seq(), "carriers are not in bijection");
  std::map<Label, Label> inv;
  for (const auto& [x, y] : bijection.table()) inv[y] = x;
  auto to = make_morphism(a, b, bijection, std::nullopt, cfg);
  auto from = make_morphism(b, a, FunctionTable(b.carrier, a.carrier, inv), std::nullopt, cfg);
  return check_iso(to, from, cfg);
}

// ---------------------------------------------------------------------------
// Limits

Assembly terminal() { return Assembly::make("1", {"*"}, Domain::all(), {{"*", Antichain({SupportSet{}})}}); }

AsmMorphism to_terminal(const Assembly& a, const CheckConfig& cfg) {
  return make_morphism(a, terminal(), FunctionTable::constant(a.carrier, {"*"}, "*"),
                       Term::app(Term::K(), Term::seq()), cfg);
}

Product product(const Assembly& a, const Assembly& b, const CheckConfig& cfg) {
  Product out;
  std::vector<Label> labels;
  std::map<Label, Antichain> gamma;
  for (const auto& x : a.carrier)
    for (const auto& y : b.carrier) {
      Label l = pair_label(x, y);
      labels.push_back(l);
      out.components[l] = {x, y};
      std::vector<SupportSet> gens;
      for (const auto& ga : a.at(x).members())
        for (const auto& gb : b.at(y).members()) gens.push_back(joined(ga, gb));
      gamma[l] = Antichain(std::move(gens));
    }
  out.object = Assembly::make(a.name + "x" + b.name, make_labels(labels), Domain::amp(a.realizers, b.realizers),
                              std::move(gamma));
  std::map<Label, Label> p, q;
  for (const auto& [l, xy] : out.components) {
    p[l] = xy.first;
    q[l] = xy.second;
  }
  out.fst = make_morphism(out.object, a, FunctionTable(out.object.carrier, a.carrier, p), synth_conj_fst(), cfg);
  out.snd = make_morphism(out.object, b, FunctionTable(out.object.carrier, b.carrier, q), synth_conj_snd(), cfg);
  return out;
}

AsmMorphism Product::pairing(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg) const {
  require_same(f.source, g.source, "pairing");
  require_same(f.target, fst.target, "pairing");
  require_same(g.target, snd.target, "pairing");
  std::map<Label, Label> t;
  for (const auto& c : f.source.carrier) t[c] = pair_label(f(c), g(c));
  FunctionTable table(f.source.carrier, object.carrier, t);
  if (tensor) return make_morphism(f.source, object, table, std::nullopt, cfg);
  return make_morphism(f.source, object, table, synth_conj_pair(f.tracking, g.tracking), cfg);
}

Equalizer equalizer(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg) {
  require_same(f.source, g.source, "equalizer");
  require_same(f.target, g.target, "equalizer");
  std::vector<Label> keep;
  for (const auto& b : f.source.carrier)
    if (f(b) == g(b)) keep.push_back(b);
  Equalizer out;
  out.object = restrict(f.source, make_labels(keep), "Eq");
  std::map<Label, Label> t;
  for (const auto& b : out.object.carrier) t[b] = b;
  out.inclusion = make_morphism(out.object, f.source, FunctionTable(out.object.carrier, f.source.carrier, t), I(), cfg);
  return out;
}

AsmMorphism Equalizer::lift(const AsmMorphism& h, const CheckConfig& cfg) const {
  require_same(h.target, inclusion.target, "equalizer lift");
  std::map<Label, Label> t;
  for (const auto& c : h.source.carrier) {
    if (!has_label(object.carrier, h(c))) throw Error("map does not factor through the equalizer at " + c);
    t[c] = h(c);
  }
  return make_morphism(h.source, object, FunctionTable(h.source.carrier, object.carrier, t), h.tracking, cfg);
}

Pullback pullback(const AsmMorphism& h, const AsmMorphism& f, const CheckConfig& cfg) {
  require_same(h.target, f.target, "pullback");
  const Assembly& x = h.source;
  const Assembly& b = f.source;
  std::vector<Label> labels;
  std::map<Label, Antichain> gamma;
  std::map<Label, Label> l, r;
  for (const auto& xi : x.carrier)
    for (const auto& bi : b.carrier) {
      if (h(xi) != f(bi)) continue;
      Label lab = pair_label(xi, bi);
      labels.push_back(lab);
      l[lab] = xi;
      r[lab] = bi;
      std::vector<SupportSet> gens;
      for (const auto& gx : x.at(xi).members())
        for (const auto& gb : b.at(bi).members()) gens.push_back(joined(gx, gb));
      gamma[lab] = Antichain(std::move(gens));
    }
  Pullback out;
  out.object =
      Assembly::make(x.name + "x_" + h.target.name + b.name, make_labels(labels), Domain::amp(x.realizers, b.realizers),
                     std::move(gamma));
  out.left = make_morphism(out.object, x, FunctionTable(out.object.carrier, x.carrier, l), synth_conj_fst(), cfg);
  out.right = make_morphism(out.object, b, FunctionTable(out.object.carrier, b.carrier, r), synth_conj_snd(), cfg);
  return out;
}

// ---------------------------------------------------------------------------
// Regular structure

bool is_mono(const AsmMorphism& f) { return f.map.injective(); }

Ternary is_super_epi(const AsmMorphism& f, const Term& r, const CheckConfig& cfg) {
  const Assembly& b = f.source;
  const Assembly& a = f.target;
  for (const auto& x : a.carrier)
    if (f.map.fiber(x).empty())
      return Ternary::fails(code_of(a.at(x).members().front()), "nothing lies over " + x);

  EvalResult nr = normalize(r, cfg.fuel);
  if (nr.diverged()) return Ternary::unknown(Ternary::Reason::Fuel, "witness has no normal form");
  if (nr.stuck()) return Ternary::fails(r, "witness is not an element: " + nr.reason);
  const Term& t = nr.value;

  if (t == identity_nf()) {
    if (auto within = realizers_within(a.realizers, b.realizers)) {
      if (!*within)
        for (const auto& e : a.realizers.elements())
          if (!b.realizers.contains(e)) return Ternary::fails(Term::seq({e}), "element " + e.str() + " is outside !B");
      for (const auto& x : a.carrier)
        for (const auto& g : a.at(x).members()) {
          auto fib = f.map.fiber(x);
          if (std::none_of(fib.begin(), fib.end(), [&](const Label& y) { return b.at(y).covers_support(g); }))
            return Ternary::fails(code_of(g), "no point over " + x + " is realized by it");
        }
      return Ternary::holds(true);
    }
  }

  if (auto value = constant_value(t)) {
    if (!b.realizers.contains_code(*value))
      return Ternary::fails(Term::seq(), "constant " + value->str() + " is outside !" + b.realizers.str());
    for (const auto& x : a.carrier) {
      auto fib = f.map.fiber(x);
      if (std::none_of(fib.begin(), fib.end(), [&](const Label& y) { return b.at(y).covers(*value); }))
        return Ternary::fails(code_of(a.at(x).members().front()), "no point over " + x + " is realized by the witness");
    }
    return Ternary::holds(true);
  }

  Ternary acc = Ternary::holds(false);
  for (const auto& m : potential_inputs(a, cfg.probes)) {
    EvalResult out = apply(t, m, cfg.fuel);
    if (!out.ok()) {
      Ternary o = outcome(out, m, "");
      if (o.is_fails()) return o;
      acc = both(acc, o);
      continue;
    }
    if (!b.realizers.contains_code(out.value))
      return Ternary::fails(m, "gives " + out.value.str() + ", outside !" + b.realizers.str());
  }
  for (const auto& x : a.carrier)
    for (const auto& m : actual_probes(a.value(x), cfg.probes)) {
      EvalResult out = apply(t, m, cfg.fuel);
      if (!out.ok()) {
        Ternary o = outcome(out, m, " at " + x);
        if (o.is_fails()) return o;
        acc = both(acc, o);
        continue;
      }
      auto fib = f.map.fiber(x);
      if (std::none_of(fib.begin(), fib.end(), [&](const Label& y) { return b.realizes(y, out.value); }))
        return Ternary::fails(m, "no point over " + x + " is realized by " + out.value.str());
    }
  return acc.probe_level();
}

Factorization factorize(const AsmMorphism& f, const CheckConfig& cfg) {
  const Assembly& b = f.source;
  LabelSet im = f.map.image();
  std::map<Label, Antichain> gamma;
  for (const auto& a : im) {
    Antichain acc;
    for (const auto& y : f.map.fiber(a)) acc = Antichain::unite(acc, b.at(y));
    gamma[a] = acc;
  }
  Factorization out;
  out.image = Assembly::make("Im", im, b.realizers, std::move(gamma));
  out.super_epi = make_morphism(b, out.image, FunctionTable(b.carrier, im, f.map.table()), I(), cfg);
  std::map<Label, Label> incl;
  for (const auto& a : im) incl[a] = a;
  out.mono = make_morphism(out.image, f.target, FunctionTable(im, f.target.carrier, incl), f.tracking, cfg);
  out.super_epi_witness = I();
  return out;
}

// ---------------------------------------------------------------------------
// Colimits

Assembly initial() { return Assembly::make("0", {}, Domain::all(), {}); }

AsmMorphism from_initial(const Assembly& a, const CheckConfig& cfg) {
  return make_morphism(initial(), a, FunctionTable({}, a.carrier, {}), Term::app(Term::K(), Term::seq()), cfg);
}

Sum sum(const Assembly& a, const Assembly& b, const CheckConfig& cfg) {
  std::vector<Label> labels;
  std::map<Label, Antichain> gamma;
  std::map<Label, Label> l, r;
  for (const auto& x : a.carrier) {
    Label lab = inl_label(x);
    labels.push_back(lab);
    l[x] = lab;
    std::vector<SupportSet> gens;
    for (const auto& g : a.at(x).members()) gens.push_back(tagged(0, g));
    gamma[lab] = Antichain(std::move(gens));
  }
  for (const auto& y : b.carrier) {
    Label lab = inr_label(y);
    labels.push_back(lab);
    r[y] = lab;
    std::vector<SupportSet> gens;
    for (const auto& g : b.at(y).members()) gens.push_back(tagged(1, g));
    gamma[lab] = Antichain(std::move(gens));
  }
  Sum out;
  out.object = Assembly::make(a.name + "+" + b.name, make_labels(labels), Domain::amp(a.realizers, b.realizers),
                              std::move(gamma));
  out.inl = make_morphism(a, out.object, FunctionTable(a.carrier, out.object.carrier, l), synth_disj_inl(), cfg);
  out.inr = make_morphism(b, out.object, FunctionTable(b.carrier, out.object.carrier, r), synth_disj_inr(), cfg);
  return out;
}

AsmMorphism Sum::copair(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg) const {
  require_same(f.source, inl.source, "copairing");
  require_same(g.source, inr.source, "copairing");
  require_same(f.target, g.target, "copairing");
  std::map<Label, Label> t;
  for (const auto& x : f.source.carrier) t[inl(x)] = f(x);
  for (const auto& y : g.source.carrier) t[inr(y)] = g(y);
  return make_morphism(object, f.target, FunctionTable(object.carrier, f.target.carrier, t),
                       synth_disj_elim(f.tracking, g.tracking), cfg);
}

Coequalizer coequalizer(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg) {
  require_same(f.source, g.source, "coequalizer");
  require_same(f.target, g.target, "coequalizer");
  const Assembly& a = f.target;
  std::map<Label, Label> parent;
  for (const auto& x : a.carrier) parent[x] = x;
  std::function<Label(const Label&)> find = [&](const Label& x) -> Label {
    if (parent[x] == x) return x;
    return parent[x] = find(parent[x]);
  };
  for (const auto& b : f.source.carrier) {
    Label p = find(f(b)), q = find(g(b));
    if (p == q) continue;
    if (q < p) std::swap(p, q);
    parent[q] = p;
  }
  std::map<Label, Label> cls;
  std::map<Label, Antichain> gamma;
  for (const auto& x : a.carrier) {
    Label rep = find(x);
    cls[x] = rep;
    gamma[rep] = Antichain::unite(gamma[rep], a.at(x));
  }
  LabelSet reps;
  for (const auto& [rep, _] : gamma) reps.push_back(rep);
  Coequalizer out;
  out.object = Assembly::make("Q", make_labels(reps), a.realizers, std::move(gamma));
  out.quotient = make_morphism(a, out.object, FunctionTable(a.carrier, out.object.carrier, cls), I(), cfg);
  return out;
}

AsmMorphism Coequalizer::induced(const AsmMorphism& h, const CheckConfig& cfg) const {
  require_same(h.source, quotient.source, "induced map");
  std::map<Label, Label> t;
  for (const auto& x : h.source.carrier) {
    const Label& c = quotient(x);
    auto [it, fresh] = t.emplace(c, h(x));
    if (!fresh && it->second != h(x)) throw Error("map is not constant on the class of " + c);
  }
  return make_morphism(object, h.target, FunctionTable(object.carrier, h.target.carrier, t), h.tracking, cfg);
}

// ---------------------------------------------------------------------------
// Π

namespace {

Label section_label(const Label& a, const std::map<Label, Label>& t) {
  std::string out = a + ":[";
  bool first = true;
  for (const auto& [b, s] : t) {
    if (!first) out += ",";
    first = false;
    out += b + ">" + s;
  }
  return out + "]";
}

Term constant_tracker(const Assembly& tgt, const std::map<Label, Label>& t) {
  std::vector<Term> elems;
  for (const auto& [_, s] : t) {
    const auto& g = tgt.at(s).members().front();
    elems.insert(elems.end(), g.begin(), g.end());
  }
  return Term::app(Term::K(), code_of(make_support(std::move(elems))));
}

}  // namespace

Term pi_evaluation_realizer() {
  std::vector<std::string> scope{"w"};
  Term each = abstract("n", Term::app(v("n"), right_of(v("w"))), scope);
  return lambda({"w"}, ap(P(Prim::Cat), {ap(P(Prim::Map), {each, right_of(left_of(v("w")))})}));
}

Pi pi_along(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg) {
  require_same(g.target, f.source, "dependent product");
  const Assembly& a = f.target;
  const Assembly& b = f.source;
  const Assembly& s = g.source;

  struct Candidate {
    PiSection sec;
    Assembly fiber;
    FunctionTable table;
  };
  std::vector<Candidate> found;
  std::vector<Term> pool;
  Pi out;
  for (const auto& x : a.carrier) {
    LabelSet bx = f.map.fiber(x);
    Assembly fiber = restrict(b, bx, b.name + "_" + x);
    std::vector<LabelSet> choices;
    for (const auto& y : bx) choices.push_back(g.map.fiber(y));
    if (std::any_of(choices.begin(), choices.end(), [](const LabelSet& c) { return c.empty(); })) continue;
    std::vector<std::size_t> idx(bx.size(), 0);
    while (true) {
      std::map<Label, Label> t;
      for (std::size_t i = 0; i < bx.size(); ++i) t[bx[i]] = choices[i][idx[i]];
      FunctionTable table(bx, s.carrier, t);
      Term n = constant_tracker(s, t);
      PiSection sec{x, t, std::nullopt};
      if (check_tracking(fiber, s, table, n, cfg).is_holds()) {
        sec.tracking = n;
        if (std::find(pool.begin(), pool.end(), n) == pool.end()) pool.push_back(n);
        found.push_back({sec, fiber, table});
      } else {
        out.excluded.push_back(sec);
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }

  Domain pool_domain = Domain::finite(pool);
  std::vector<Label> labels;
  std::map<Label, Antichain> tau;
  std::map<Label, Label> to_a;
  std::map<Label, PiSection> by_label;
  for (const auto& c : found) {
    Label lab = section_label(c.sec.a, c.sec.section);
    labels.push_back(lab);
    to_a[lab] = c.sec.a;
    by_label[lab] = c.sec;
    std::vector<SupportSet> gens;
    for (const auto& n : pool) {
      if (!check_tracking(c.fiber, s, c.table, n, cfg).is_holds()) continue;
      for (const auto& ga : a.at(c.sec.a).members()) gens.push_back(joined(ga, SupportSet{n}));
    }
    tau[lab] = Antichain(std::move(gens));
  }
  out.object = Assembly::make("Pi", make_labels(labels), Domain::amp(a.realizers, pool_domain), std::move(tau));
  for (const auto& l : out.object.carrier) out.sections.push_back(by_label.at(l));
  out.structure =
      make_morphism(out.object, a, FunctionTable(out.object.carrier, a.carrier, to_a), synth_conj_fst(), cfg);
  out.pulled = pullback(out.structure, f, cfg);
  std::map<Label, Label> ev;
  for (const auto& p : out.pulled.object.carrier) {
    const PiSection& sec = by_label.at(out.pulled.left(p));
    ev[p] = sec.section.at(out.pulled.right(p));
  }
  out.evaluation = make_morphism(out.pulled.object, s, FunctionTable(out.pulled.object.carrier, s.carrier, ev),
                                 pi_evaluation_realizer(), cfg);
  out.f = f;
  out.g = g;
  return out;
}

AsmMorphism Pi::mediator(const AsmMorphism& c, const Pullback& q, const AsmMorphism& h, const CheckConfig& cfg) const {
  require_same(c.target, f.target, "dependent product mediator");
  require_same(h.source, q.object, "dependent product mediator");
  require_same(h.target, g.source, "dependent product mediator");
  for (const auto& p : q.object.carrier)
    if (g(h(p)) != q.right(p)) throw Error("map is not over the base at " + p);
  std::map<Label, Label> k;
  for (const auto& x : c.source.carrier) {
    std::map<Label, Label> t;
    for (const auto& y : f.map.fiber(c(x))) t[y] = h(pair_label(x, y));
    Label lab = section_label(c(x), t);
    if (!has_label(object.carrier, lab)) throw Error("section " + lab + " has no tracking");
    k[x] = lab;
  }
  return make_morphism(c.source, object, FunctionTable(c.source.carrier, object.carrier, k), std::nullopt, cfg);
}

// ---------------------------------------------------------------------------
// Natural numbers

Assembly nno(std::size_t n_max) {
  std::vector<Label> labels;
  std::vector<Term> nums;
  std::map<Label, Antichain> nu;
  for (std::size_t n = 0; n <= n_max; ++n) {
    labels.push_back(std::to_string(n));
    nums.push_back(Term::num(n));
    nu[std::to_string(n)] = Antichain({SupportSet{Term::num(n)}});
  }
  return Assembly::make("N", make_labels(labels), Domain::finite(nums), std::move(nu));
}

AsmMorphism nno_recursor(const AsmMorphism& z, const AsmMorphism& s, std::size_t n_max, const CheckConfig& cfg) {
  if (z.source.carrier.size() != 1) throw InvalidAssembly("base point must come from a one-point assembly");
  require_same(z.target, s.source, "recursor");
  require_same(s.source, s.target, "recursor");
  const Assembly& a = s.source;
  Assembly n = nno(n_max);
  std::map<Label, Label> t;
  Label cur = z(z.source.carrier.front());
  for (std::size_t i = 0; i <= n_max; ++i) {
    t[std::to_string(i)] = cur;
    cur = s(cur);
  }
  Term start = Term::app(z.tracking, Term::seq());
  Term each = abstract("n", ap(P(Prim::Iter), {v("n"), s.tracking, start}));
  Term rec = lambda({"M"}, ap(P(Prim::Cat), {ap(P(Prim::Map), {each, v("M")})}));
  return make_morphism(n, a, FunctionTable(n.carrier, a.carrier, t), rec, cfg);
}

// ---------------------------------------------------------------------------
// Text formats

Assembly assembly_from_sexpr(const Sexpr& e) {
  if (!e.head_is("assembly") || e.list.size() != 5 || e.list[1].is_list)
    throw ParseError("expected (assembly NAME (carrier …) (domain …) (alpha …))", e.offset);
  LabelSet carrier = labels_from_sexpr(e.list[2], "carrier");
  const Sexpr& d = e.list[3];
  if (!d.head_is("domain") || d.list.size() != 2) throw ParseError("expected (domain D)", d.offset);
  Domain realizers = domain_from_sexpr(d.list[1]);
  const Sexpr& al = e.list[4];
  if (!al.head_is("alpha")) throw ParseError("expected (alpha …)", al.offset);
  std::map<Label, Antichain> alpha;
  for (std::size_t i = 1; i < al.list.size(); ++i) {
    const Sexpr& entry = al.list[i];
    if (!entry.is_list || entry.list.size() != 2 || entry.list[0].is_list || !entry.list[1].head_is("gens"))
      throw ParseError("expected (x (gens …))", entry.offset);
    std::vector<SupportSet> gens;
    for (std::size_t j = 1; j < entry.list[1].list.size(); ++j) {
      const Sexpr& g = entry.list[1].list[j];
      if (!g.head_is("set")) throw ParseError("expected (set …)", g.offset);
      std::vector<Term> xs;
      for (std::size_t k = 1; k < g.list.size(); ++k) xs.push_back(term_from_sexpr(g.list[k]));
      gens.push_back(make_support(std::move(xs)));
    }
    if (!alpha.emplace(entry.list[0].atom, Antichain(std::move(gens))).second)
      throw ParseError("point listed twice", entry.offset);
  }
  try {
    return Assembly::make(e.list[1].atom, std::move(carrier), std::move(realizers), std::move(alpha));
  } catch (const InvalidAssembly& err) {
    throw ParseError(err.what(), e.offset);
  }
}

AsmMorphism morphism_from_sexpr(const Sexpr& e, const std::map<std::string, Assembly>& assemblies,
                                const CheckConfig& cfg) {
  if (!e.head_is("morphism") || e.list.size() < 5 || e.list.size() > 6 || e.list[1].is_list)
    throw ParseError("expected (morphism NAME (source A) (target B) (map …) [(tracking T)])", e.offset);
  auto lookup = [&](const Sexpr& s, std::string_view head) -> const Assembly& {
    if (!s.head_is(head) || s.list.size() != 2 || s.list[1].is_list)
      throw ParseError("expected (" + std::string(head) + " NAME)", s.offset);
    auto it = assemblies.find(s.list[1].atom);
    if (it == assemblies.end()) throw ParseError("unknown assembly " + s.list[1].atom, s.offset);
    return it->second;
  };
  const Assembly& src = lookup(e.list[2], "source");
  const Assembly& tgt = lookup(e.list[3], "target");
  const Sexpr& m = e.list[4];
  if (!m.head_is("map")) throw ParseError("expected (map …)", m.offset);
  std::map<Label, Label> t;
  for (std::size_t i = 1; i < m.list.size(); ++i) {
    const Sexpr& p = m.list[i];
    if (!p.is_list || p.list.size() != 2 || p.list[0].is_list || p.list[1].is_list)
      throw ParseError("expected (x y)", p.offset);
    if (!t.emplace(p.list[0].atom, p.list[1].atom).second) throw ParseError("point mapped twice", p.offset);
  }
  std::optional<Term> tracking;
  if (e.list.size() == 6) {
    const Sexpr& tr = e.list[5];
    if (!tr.head_is("tracking") || tr.list.size() != 2) throw ParseError("expected (tracking TERM)", tr.offset);
    tracking = term_from_sexpr(tr.list[1]);
  }
  FunctionTable table;
  try {
    table = FunctionTable(src.carrier, tgt.carrier, std::move(t));
  } catch (const Error& err) {
    throw ParseError(err.what(), m.offset);
  }
  return make_morphism(src, tgt, table, tracking, cfg);
}

std::string morphism_text(const std::string& name, const AsmMorphism& f) {
  std::ostringstream os;
  os << "(morphism " << quote_atom(name) << " (source " << quote_atom(f.source.name) << ") (target "
     << quote_atom(f.target.name) << ") (map";
  for (const auto& [x, y] : f.map.table()) os << " (" << quote_atom(x) << ' ' << quote_atom(y) << ')';
  os << ") (tracking " << f.tracking.str() << "))";
  return os.str();
}

}  // namespace herbrand
