#include "herbrand/tripos.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "herbrand/pca.hpp"
#include "herbrand/sexpr.hpp"

namespace herbrand {

Predicate::Predicate(std::map<Label, TruthValue> values) {
  for (auto& [x, t] : values) {
    index_.push_back(x);
    values_.push_back(t);
  }
}

Predicate Predicate::constant(const LabelSet& index, const TruthValue& t) {
  std::map<Label, TruthValue> m;
  for (const auto& x : index) m.emplace(x, t);
  return Predicate(std::move(m));
}

const TruthValue& Predicate::at(const Label& x) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), x);
  if (it == index_.end() || *it != x) throw Error("predicate is not defined at '" + x + "'");
  return values_[static_cast<std::size_t>(it - index_.begin())];
}

std::string Predicate::str() const {
  std::ostringstream os;
  os << "(predicate " << labels_str("index", index_);
  for (std::size_t i = 0; i < index_.size(); ++i) os << " (" << quote_atom(index_[i]) << ' ' << values_[i] << ')';
  os << ')';
  return os.str();
}

namespace {

template <class Op>
Predicate pointwise(const Predicate& a, const Predicate& b, Op op) {
  if (a.index() != b.index()) throw Error("predicates over different index sets");
  std::map<Label, TruthValue> m;
  for (const auto& x : a.index()) m.emplace(x, op(a.at(x), b.at(x)));
  return Predicate(std::move(m));
}

}  // namespace

Predicate conj(const Predicate& a, const Predicate& b) {
  return pointwise(a, b, [](const TruthValue& l, const TruthValue& r) { return conj(l, r); });
}

Predicate disj(const Predicate& a, const Predicate& b) {
  return pointwise(a, b, [](const TruthValue& l, const TruthValue& r) { return disj(l, r); });
}

Predicate imp(const Predicate& a, const Predicate& b) {
  return pointwise(a, b, [](const TruthValue& l, const TruthValue& r) { return imp(l, r); });
}

Predicate neg(const Predicate& a) { return pointwise(a, a, [](const TruthValue& l, const TruthValue&) { return neg(l); }); }

Predicate reindex(const FunctionTable& f, const Predicate& psi) {
  if (f.codomain() != psi.index()) throw Error("reindexing along a function into a different index set");
  std::map<Label, TruthValue> m;
  for (const auto& y : f.domain()) m.emplace(y, psi.at(f(y)));
  return Predicate(std::move(m));
}

// ---------------------------------------------------------------------------

EntailmentReport check_entailment(const Predicate& phi, const Predicate& psi, const Term& r, const CheckConfig& cfg) {
  if (phi.index() != psi.index()) throw Error("entailment between predicates over different index sets");
  EntailmentReport rep;
  rep.realizer = r;
  rep.potential = Ternary::holds(false);
  rep.actual = Ternary::holds(false);

  auto run_clause = [&](const Label& x, bool actual_clause) {
    const TruthValue& src = phi.at(x);
    const TruthValue& dst = psi.at(x);
    const char* clause = actual_clause ? "actual" : "potential";
    Ternary& acc = actual_clause ? rep.actual : rep.potential;
    auto probes = actual_clause ? actual_probes(src, cfg.probes) : potential_probes(src, cfg.probes);
    for (const auto& n : probes) {
      ProbeRecord rec{x, clause, n, std::nullopt, Ternary::holds()};
      EvalResult e = apply(r, n, cfg.fuel);
      if (e.diverged()) {
        rec.verdict = Ternary::unknown(Ternary::Reason::Fuel, "at " + x + ": no value on " + n.str());
      } else if (e.stuck()) {
        rec.verdict = Ternary::fails(n, "at " + x + ": realizer undefined on " + n.str() + " (" + e.reason + ")");
      } else {
        rec.output = e.value;
        Ternary m = actual_clause ? actual_member(dst, e.value, cfg) : potential_member(dst, e.value, cfg);
        if (m.is_fails())
          rec.verdict = Ternary::fails(n, "at " + x + ": " + n.str() + " goes to " + e.value.str() + ", not " +
                                              clause + (m.note().empty() ? "" : " (" + m.note() + ")"));
        else
          rec.verdict = m;
      }
      bool bad = !rec.verdict.is_holds();
      acc = both(acc, rec.verdict);
      rep.transcript.push_back(std::move(rec));
      if (bad && !rep.index) rep.index = x;
      if (acc.is_fails()) return;
    }
  };

  for (const auto& x : phi.index()) {
    run_clause(x, false);
    if (rep.potential.is_fails()) break;
    run_clause(x, true);
    if (rep.actual.is_fails()) break;
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

Term P(Prim p) { return Term::prim(p); }
Term app(const Term& f, const Term& a) { return Term::app(f, a); }
Term app(const Term& f, const Term& a, const Term& b) { return ap(f, {a, b}); }

const Term& iso_term() {
  static const Term t = exp_iso().first;
  return t;
}

const Term& inv_term() {
  static const Term t = exp_iso().second;
  return t;
}

Term left_of(const Term& m) { return app(P(Prim::Fst), app(iso_term(), m)); }
Term right_of(const Term& m) { return app(P(Prim::Snd), app(iso_term(), m)); }
Term join(const Term& x, const Term& y) { return app(inv_term(), app(P(Prim::Pair), x, y)); }

// λm. cat (map (λc. c a) cs), with `a` and `cs` mentioning m.
Term apply_all(const Term& cs, const Term& a) {
  std::vector<std::string> scope{"m"};
  Term each = abstract("c", app(v("c"), a), scope);
  return lambda({"m"}, app(P(Prim::Cat), app(P(Prim::Map), each, cs)));
}

}  // namespace

Term synth_identity() { return I(); }

Term synth_compose(const Term& r, const Term& s) { return lambda({"n"}, app(s, app(r, v("n")))); }

Term synth_top_intro() { return abstract("m", Term::seq()); }

Term synth_bottom_elim() { return I(); }

Term synth_conj_fst() { return lambda({"m"}, left_of(v("m"))); }

Term synth_conj_snd() { return lambda({"m"}, right_of(v("m"))); }

Term synth_conj_pair(const Term& r, const Term& s) {
  return lambda({"m"}, join(app(r, v("m")), app(s, v("m"))));
}

Term synth_disj_inl() { return lambda({"m"}, join(v("m"), Term::seq())); }

Term synth_disj_inr() { return lambda({"m"}, join(Term::seq(), v("m"))); }

Term synth_disj_elim(const Term& r, const Term& s) {
  Term m = v("m");
  return lambda({"m"}, app(P(Prim::Cat), Term::seq({app(r, left_of(m)), app(s, right_of(m))})));
}

Term synth_curry(const Term& r) {
  std::vector<std::string> scope{"m"};
  Term inner = abstract("a", app(r, join(v("m"), v("a"))), scope);
  return lambda({"m"}, Term::seq({inner}));
}

Term synth_uncurry(const Term& s) { return apply_all(app(s, left_of(v("m"))), right_of(v("m"))); }

Term synth_eval() { return apply_all(left_of(v("m")), right_of(v("m"))); }

// ---------------------------------------------------------------------------

namespace {

std::vector<Term> codes_upto(const std::vector<Term>& elems, std::size_t max_len) {
  std::vector<Term> out{Term::seq()};
  std::vector<std::vector<Term>> layer{{}};
  for (std::size_t len = 1; len <= max_len && !elems.empty(); ++len) {
    std::vector<std::vector<Term>> next;
    for (const auto& s : layer)
      for (const auto& e : elems) {
        auto g = s;
        g.push_back(e);
        out.push_back(Term::seq(g));
        next.push_back(std::move(g));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

Predicate exists_along(const FunctionTable& f, const Predicate& phi, const ExistsConfig& cfg) {
  if (f.domain() != phi.index()) throw Error("quantifying along a function from a different index set");
  std::map<Label, TruthValue> out;
  for (const auto& y : f.codomain()) {
    std::vector<Term> a1;
    std::vector<SupportSet> gens;
    for (const auto& x : f.fiber(y)) {
      const TruthValue& t = phi.at(x);
      if (!t.is_atomic()) throw Unsupported("exact existential over a symbolic value at '" + x + "': " + t.str());
      const Domain d = t.potential();
      if (!d.is_finite()) throw Unsupported("exact existential over an infinite carrier at '" + x + "'");
      for (const auto& n : codes_upto(d.elements(), cfg.max_code_len)) {
        a1.push_back(n);
        if (t.actual().covers(n)) gens.push_back({n});
      }
    }
    out.emplace(y, mk_atom(std::move(gens), Domain::finite(std::move(a1))));
  }
  return Predicate(std::move(out));
}

Predicate forall_along(const FunctionTable& f, const Predicate& phi) {
  if (f.domain() != phi.index()) throw Error("quantifying along a function from a different index set");
  std::map<Label, TruthValue> out;
  for (const auto& y : f.codomain()) {
    std::vector<TruthValue> fiber;
    for (const auto& x : f.fiber(y)) fiber.push_back(phi.at(x));
    out.emplace(y, TruthValue::forall_node(std::move(fiber)));
  }
  return Predicate(std::move(out));
}

Term exists_transpose_down(const Term& r) { return lambda({"m"}, app(r, Term::seq({v("m")}))); }

Term exists_transpose_up(const Term& s) { return lambda({"M"}, app(P(Prim::Cat), app(P(Prim::Map), s, v("M")))); }

Term forall_transpose_up(const Term& r) {
  std::vector<std::string> scope{"p"};
  return lambda({"p"}, Term::seq({abstract("q", app(r, v("p")), scope)}));
}

Term forall_transpose_down(const Term& s) {
  Term each = abstract("c", app(v("c"), Term::num(0)));
  return lambda({"p"}, app(P(Prim::Cat), app(P(Prim::Map), each, app(s, v("p")))));
}

// ---------------------------------------------------------------------------

PullbackSquare pullback(const FunctionTable& f, const FunctionTable& g) {
  if (f.codomain() != g.codomain()) throw Error("pullback of functions with different codomains");
  std::map<Label, Label> p, q;
  for (const auto& z : g.domain())
    for (const auto& x : f.domain())
      if (g(z) == f(x)) {
        Label pz = z + "|" + x;
        p[pz] = z;
        q[pz] = x;
      }
  std::vector<Label> apex;
  for (const auto& [k, _] : p) apex.push_back(k);
  LabelSet a = make_labels(apex);
  return {FunctionTable(a, g.domain(), p), FunctionTable(a, f.domain(), q), f, g};
}

namespace {

void require_pullback(const PullbackSquare& sq) {
  if (sq.q.codomain() != sq.f.domain() || sq.p.codomain() != sq.g.domain() || sq.f.codomain() != sq.g.codomain() ||
      sq.p.domain() != sq.q.domain())
    throw Error("square of functions does not fit together");
  if (compose(sq.f, sq.q) != compose(sq.g, sq.p)) throw Error("square does not commute");
  std::set<std::pair<Label, Label>> seen;
  for (const auto& w : sq.p.domain())
    if (!seen.emplace(sq.p(w), sq.q(w)).second) throw Error("square is not a pullback: '" + w + "' is a duplicate");
  for (const auto& z : sq.g.domain())
    for (const auto& x : sq.f.domain())
      if (sq.g(z) == sq.f(x) && !seen.count({z, x}))
        throw Error("square is not a pullback: nothing over ('" + z + "', '" + x + "')");
}

}  // namespace

BeckChevalleyReport beck_chevalley_check(const PullbackSquare& sq, const Predicate& phi, const CheckConfig& cfg,
                                         const ExistsConfig& ecfg) {
  require_pullback(sq);
  BeckChevalleyReport rep;
  Predicate lhs = reindex(sq.g, exists_along(sq.f, phi, ecfg));
  Predicate rhs = exists_along(sq.p, reindex(sq.q, phi), ecfg);
  for (const auto& z : lhs.index())
    if (!(lhs.at(z) == rhs.at(z))) rep.exists_mismatches.push_back(z);
  rep.exists_equal = rep.exists_mismatches.empty();

  Predicate lhs_all = reindex(sq.g, forall_along(sq.f, phi));
  Predicate rhs_all = forall_along(sq.p, reindex(sq.q, phi));
  rep.forall_forward = check_entailment(lhs_all, rhs_all, I(), cfg).verdict();
  rep.forall_backward = check_entailment(rhs_all, lhs_all, I(), cfg).verdict();
  return rep;
}

// ---------------------------------------------------------------------------

Predicate predicate_from_sexpr(const Sexpr& e) {
  if (!e.head_is("predicate") || e.list.size() < 2) throw ParseError("expected (predicate (index …) …)", e.offset);
  LabelSet index = labels_from_sexpr(e.list[1], "index");
  std::map<Label, TruthValue> values;
  for (std::size_t i = 2; i < e.list.size(); ++i) {
    const Sexpr& row = e.list[i];
    if (!row.is_list || row.list.size() != 2 || row.list[0].is_list) throw ParseError("expected (label value)", row.offset);
    const Label& x = row.list[0].atom;
    if (!has_label(index, x)) throw ParseError("label '" + x + "' is not in the index", row.offset);
    if (!values.emplace(x, truth_from_sexpr(row.list[1])).second) throw ParseError("label given twice", row.offset);
  }
  for (const auto& x : index)
    if (!values.count(x)) throw ParseError("no value for '" + x + "'", e.offset);
  return Predicate(std::move(values));
}

Predicate parse_predicate(std::string_view text) { return predicate_from_sexpr(read_sexpr(text)); }

}  // namespace herbrand
