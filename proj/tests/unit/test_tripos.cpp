#include <gtest/gtest.h>

#include "herbrand/pca.hpp"
#include "herbrand/tripos.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace herbrand;

namespace {

const Term a = Term::num(1), b = Term::num(2), c = Term::num(3);

Term eval(const Term& t) {
  auto r = normalize(t);
  EXPECT_TRUE(r.ok()) << t;
  return r.value;
}

Predicate single(const TruthValue& t) { return Predicate::constant({"x"}, t); }

bool holds(const EntailmentReport& r) { return r.verdict().is_holds(); }

}  // namespace

TEST(Entailment, Reflexivity) {
  gen::Random rnd(1);
  for (int i = 0; i < 50; ++i) {
    auto phi = rnd.predicate(gen::labels("x", 1 + rnd.below(3)), gen::universe());
    auto rep = check_entailment(phi, phi, synth_identity());
    EXPECT_TRUE(holds(rep)) << phi.str() << " " << rep.verdict().str();
    EXPECT_FALSE(rep.verdict().exact());
    EXPECT_FALSE(rep.transcript.empty());
  }
}

TEST(Entailment, TopDoesNotEntailBottom) {
  for (const Term& r : {I(), Term::app(Term::K(), Term::seq()), Term::S()}) {
    auto rep = check_entailment(single(TruthValue::top()), single(TruthValue::bottom()), r);
    ASSERT_TRUE(rep.verdict().is_fails()) << r;
    EXPECT_TRUE(rep.verdict().witness().has_value());
    EXPECT_EQ(rep.index, Label("x"));
  }
}

TEST(Entailment, IndexMismatch) {
  EXPECT_THROW(check_entailment(Predicate::constant({"x"}, TruthValue::top()),
                                Predicate::constant({"y"}, TruthValue::top()), I()),
               Error);
}

TEST(Entailment, Composition) {
  gen::Random rnd(2);
  auto u = gen::universe();
  for (int i = 0; i < 30; ++i) {
    auto phi = rnd.predicate({"x", "y"}, u);
    auto psi = rnd.predicate({"x", "y"}, u);
    // φ ≤ φ∨ψ ≤ ψ∨φ composed from injections and elimination.
    Term r = synth_disj_inl();
    Term s = synth_disj_elim(synth_disj_inr(), synth_disj_inl());
    EXPECT_TRUE(holds(check_entailment(phi, disj(psi, phi), synth_compose(r, s))));
  }
}

TEST(Heyting, ConjunctionLaws) {
  gen::Random rnd(3);
  auto u = gen::universe();
  for (int i = 0; i < 30; ++i) {
    LabelSet x = gen::labels("x", 1 + rnd.below(3));
    auto phi = rnd.predicate(x, u), psi = rnd.predicate(x, u), chi = rnd.predicate(x, u);
    EXPECT_TRUE(holds(check_entailment(conj(phi, psi), phi, synth_conj_fst())));
    EXPECT_TRUE(holds(check_entailment(conj(phi, psi), psi, synth_conj_snd())));
    Term pair = synth_conj_pair(synth_conj_fst(), synth_conj_snd());
    EXPECT_TRUE(holds(check_entailment(conj(phi, psi), conj(phi, psi), pair)));
    // Top is a unit.
    auto top = Predicate::constant(x, TruthValue::top());
    EXPECT_TRUE(holds(check_entailment(conj(top, chi), chi, synth_conj_snd())));
    EXPECT_TRUE(holds(check_entailment(chi, conj(top, chi), synth_conj_pair(synth_top_intro(), synth_identity()))));
  }
}

TEST(Heyting, DisjunctionLaws) {
  gen::Random rnd(4);
  auto u = gen::universe();
  for (int i = 0; i < 30; ++i) {
    LabelSet x = gen::labels("x", 1 + rnd.below(3));
    auto phi = rnd.predicate(x, u), psi = rnd.predicate(x, u);
    EXPECT_TRUE(holds(check_entailment(phi, disj(phi, psi), synth_disj_inl())));
    EXPECT_TRUE(holds(check_entailment(psi, disj(phi, psi), synth_disj_inr())));
    EXPECT_TRUE(holds(check_entailment(disj(phi, phi), phi, synth_disj_elim(I(), I()))));
    auto bot = Predicate::constant(x, TruthValue::bottom());
    EXPECT_TRUE(holds(check_entailment(bot, phi, synth_bottom_elim())));
  }
}

TEST(Heyting, DisjElimConcatenates) {
  auto A = mk_atom({{a}}, Domain::finite({a}));
  auto B = mk_atom({{b}}, Domain::finite({b}));
  auto D = mk_atom({{a}, {b}}, Domain::finite({a, b}));
  Term t = synth_disj_elim(I(), I());
  // Only the left component actual: output still actual by upward closure.
  Term m = join_tagged(Term::seq({a}), Term::seq());
  Term out = eval(Term::app(t, m));
  EXPECT_EQ(out, Term::seq({a}));
  EXPECT_TRUE(actual_member(D, out).exact());
  // Both merely potential: output potential but not actual.
  auto A2 = mk_atom({{a}}, Domain::finite({a, c}));
  auto B2 = mk_atom({{b}}, Domain::finite({b, c}));
  auto D2 = mk_atom({{a}, {b}}, Domain::finite({a, b, c}));
  Term out2 = eval(Term::app(t, join_tagged(Term::seq({c}), Term::seq({c}))));
  EXPECT_TRUE(potential_member(D2, out2).exact());
  EXPECT_TRUE(actual_member(D2, out2).is_fails());
  EXPECT_TRUE(holds(check_entailment(single(disj(A, B)), single(D), t)));
  EXPECT_TRUE(holds(check_entailment(single(disj(A2, B2)), single(D2), t)));
}

TEST(Heyting, ImplicationLaws) {
  gen::Random rnd(5);
  auto u = gen::universe();
  for (int i = 0; i < 20; ++i) {
    LabelSet x = gen::labels("x", 1 + rnd.below(2));
    auto phi = rnd.predicate(x, u), psi = rnd.predicate(x, u), chi = rnd.predicate(x, u);
    auto ev = check_entailment(conj(imp(phi, psi), phi), psi, synth_eval());
    EXPECT_TRUE(holds(ev)) << ev.verdict().str();
    // χ∧φ ≤ φ curries to χ ≤ φ→φ, and uncurrying gives the projection back.
    Term cur = synth_curry(synth_conj_snd());
    auto c1 = check_entailment(chi, imp(phi, phi), cur);
    EXPECT_TRUE(holds(c1)) << c1.verdict().str();
    auto c2 = check_entailment(conj(chi, phi), phi, synth_uncurry(cur));
    EXPECT_TRUE(holds(c2)) << c2.verdict().str();
  }
}

TEST(Heyting, BadRealizerRejected) {
  auto A = single(mk_atom({{a}}, Domain::finite({a})));
  auto B = single(mk_atom({{b}}, Domain::finite({b})));
  auto rep = check_entailment(A, B, I());
  ASSERT_TRUE(rep.verdict().is_fails());
  EXPECT_EQ(*rep.verdict().witness(), Term::seq({a}));
}

TEST(Reindex, Laws) {
  gen::Random rnd(6);
  auto u = gen::universe();
  LabelSet X = gen::labels("x", 3), Y = gen::labels("y", 2);
  for (int i = 0; i < 20; ++i) {
    auto phi = rnd.predicate(X, u), psi = rnd.predicate(X, u);
    EXPECT_EQ(reindex(FunctionTable::identity(X), psi), psi);
    auto k = FunctionTable::constant(Y, X, "x1");
    EXPECT_EQ(reindex(k, psi), Predicate::constant(Y, psi.at("x1")));
    auto f = rnd.function(Y, X);
    EXPECT_EQ(reindex(f, conj(phi, psi)), conj(reindex(f, phi), reindex(f, psi)));
  }
}

TEST(Exists, IdentityGivesSingletons) {
  auto phi = Predicate(std::map<Label, TruthValue>{{"x", mk_atom({{a}}, Domain::finite({a, b}))}});
  auto e = exists_along(FunctionTable::identity({"x"}), phi).at("x");
  for (const auto& g : e.actual().members()) EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(actual_member(e, Term::seq({Term::seq({a})})).exact());
  EXPECT_TRUE(actual_member(e, Term::seq({Term::seq({b})})).is_fails());
}

TEST(Exists, EmptyFiber) {
  auto phi = Predicate::constant({"x"}, mk_atom({{a}}, Domain::finite({a})));
  FunctionTable f({"x"}, {"y", "z"}, {{"x", "y"}});
  auto e = exists_along(f, phi);
  EXPECT_TRUE(e.at("z").actual().empty());
  EXPECT_FALSE(inhabited(e.at("z")));
  EXPECT_TRUE(inhabited(e.at("y")));
}

TEST(Exists, TwoPointFiberMatchesOracle) {
  gen::Random rnd(7);
  auto u = gen::universe();
  LabelSet X = gen::labels("x", 3), Y = gen::labels("y", 2);
  for (int i = 0; i < 40; ++i) {
    std::map<Label, std::vector<std::set<Term>>> raw;
    std::map<Label, std::set<Term>> carriers;
    std::map<Label, TruthValue> vals;
    for (const auto& x : X) {
      auto t = rnd.atom(u);
      std::set<Term> a1(t.potential().elements().begin(), t.potential().elements().end());
      std::vector<std::set<Term>> gs;
      for (const auto& g : t.actual().members()) gs.emplace_back(g.begin(), g.end());
      raw[x] = gs;
      carriers[x] = a1;
      vals.emplace(x, t);
    }
    auto f = rnd.function(X, Y);
    auto e = exists_along(f, Predicate(vals));
    for (const auto& y : Y) {
      // Codes n of length <= 3 over some φ(x)₁ in the fiber, and which are actual there.
      std::set<Term> codes, actual;
      for (const auto& x : f.fiber(y)) {
        std::vector<Term> elems(carriers[x].begin(), carriers[x].end());
        for (const auto& n : oracle::all_seqs(elems, 3)) {
          codes.insert(n);
          if (oracle::in_upset(n, raw[x], carriers[x])) actual.insert(n);
        }
      }
      const auto& t = e.at(y);
      std::vector<Term> cs(codes.begin(), codes.end());
      ASSERT_EQ(t.potential(), Domain::finite(cs));
      for (const auto& M : oracle::all_seqs(cs, 2)) {
        bool expect = std::any_of(M.items().begin(), M.items().end(), [&](const Term& n) { return actual.count(n); });
        ASSERT_EQ(actual_member(t, M).is_holds(), expect) << t << " " << M;
      }
    }
  }
}

TEST(Exists, SymbolicRejected) {
  auto phi = Predicate::constant({"x"}, imp(TruthValue::top(), TruthValue::top()));
  EXPECT_THROW(exists_along(FunctionTable::identity({"x"}), phi), Unsupported);
}

TEST(Exists, Transposes) {
  Term r = I();
  Term m = Term::seq({a, b});
  EXPECT_EQ(eval(Term::app(exists_transpose_down(r), m)), Term::seq({m}));
  EXPECT_EQ(eval(Term::app(exists_transpose_up(I()), Term::seq())), Term::seq());
  EXPECT_EQ(eval(Term::app(exists_transpose_up(I()), Term::seq({Term::seq({a}), Term::seq({b, c})}))),
            Term::seq({a, b, c}));
  // down(up(s)) agrees with s on codes.
  Term s = synth_disj_inl();
  for (const auto& n : oracle::all_seqs({a, b}, 2))
    EXPECT_EQ(eval(Term::app(exists_transpose_down(exists_transpose_up(s)), n)), eval(Term::app(s, n)));
}

TEST(Exists, AdjunctionUnit) {
  gen::Random rnd(8);
  auto u = gen::universe();
  LabelSet X = gen::labels("x", 3), Y = gen::labels("y", 2);
  for (int i = 0; i < 15; ++i) {
    auto phi = rnd.predicate(X, u);
    auto f = rnd.function(X, Y);
    auto ex = exists_along(f, phi);
    // φ ≤ f*∃_f φ by down(id); ∃_f φ ≤ ∃_f φ by up(down(id)).
    Term unit = exists_transpose_down(I());
    EXPECT_TRUE(holds(check_entailment(phi, reindex(f, ex), unit)));
    EXPECT_TRUE(holds(check_entailment(ex, ex, exists_transpose_up(unit))));
  }
}

TEST(Forall, Transposes) {
  Term m = Term::seq({a});
  Term s = eval(Term::app(forall_transpose_up(I()), m));
  ASSERT_EQ(s.items().size(), 1u);
  for (const auto& q : {Term::num(0), Term::K(), Term::seq()}) EXPECT_EQ(eval(Term::app(s.items()[0], q)), m);
  EXPECT_EQ(eval(Term::app(forall_transpose_down(forall_transpose_up(I())), m)), m);
}

TEST(Forall, EmptyFiberIsVacuous) {
  auto phi = Predicate::constant({"x"}, TruthValue::bottom());
  FunctionTable f({"x"}, {"y", "z"}, {{"x", "y"}});
  auto all = forall_along(f, phi);
  for (const auto& p : {Term::seq(), Term::seq({I()}), Term::seq({Term::S(), Term::num(4)})})
    EXPECT_TRUE(potential_member(all.at("z"), p).is_holds()) << p;
  EXPECT_TRUE(actual_member(all.at("y"), Term::seq({Term::app(Term::K(), Term::seq())})).is_fails());
}

TEST(Forall, AdjunctionCounit) {
  gen::Random rnd(9);
  auto u = gen::universe();
  LabelSet X = gen::labels("x", 3), Y = gen::labels("y", 2);
  for (int i = 0; i < 15; ++i) {
    auto phi = rnd.predicate(X, u);
    auto f = rnd.function(X, Y);
    auto all = forall_along(f, phi);
    // f*∀_f φ ≤ φ by down(id); ∀_f φ ≤ ∀_f φ by up(down(id)).
    Term counit = forall_transpose_down(I());
    auto r1 = check_entailment(reindex(f, all), phi, counit);
    EXPECT_TRUE(holds(r1)) << r1.verdict().str();
    auto r2 = check_entailment(all, all, forall_transpose_up(counit));
    EXPECT_TRUE(holds(r2)) << r2.verdict().str();
  }
}

TEST(BeckChevalley, Squares) {
  gen::Random rnd(10);
  auto u = gen::universe();
  LabelSet X = gen::labels("x", 2), Y = gen::labels("y", 1), Z = gen::labels("z", 2);
  auto phi = rnd.predicate(X, u);
  // Identity square.
  auto id = pullback(FunctionTable::identity(X), FunctionTable::identity(X));
  EXPECT_TRUE(beck_chevalley_check(id, phi).ok());
  // Product projections.
  auto sq = pullback(FunctionTable::constant(X, Y, "y0"), FunctionTable::constant(Z, Y, "y0"));
  EXPECT_EQ(sq.p.domain().size(), 4u);
  auto rep = beck_chevalley_check(sq, phi);
  EXPECT_TRUE(rep.exists_equal);
  EXPECT_TRUE(rep.forall_forward.is_holds());
  EXPECT_TRUE(rep.forall_backward.is_holds());
  // Empty apex.
  LabelSet Y2 = {"y0", "y1"};
  auto empty = pullback(FunctionTable::constant(X, Y2, "y0"), FunctionTable::constant(Z, Y2, "y1"));
  EXPECT_TRUE(empty.p.domain().empty());
  auto er = beck_chevalley_check(empty, phi);
  EXPECT_TRUE(er.ok());
  // A square that is not a pullback.
  auto broken = sq;
  broken.p = FunctionTable(broken.p.domain(), broken.p.codomain(), [&] {
    std::map<Label, Label> t = broken.p.table();
    t.begin()->second = Z.back();
    return t;
  }());
  EXPECT_THROW(beck_chevalley_check(broken, phi), Error);
}

TEST(Text, PredicateAndFunctionRoundTrip) {
  gen::Random rnd(11);
  auto phi = rnd.predicate({"a b", "c"}, gen::universe());
  EXPECT_EQ(parse_predicate(phi.str()), phi);
  auto f = rnd.function({"p", "q"}, {"r", "s t"});
  EXPECT_EQ(parse_function(f.str()), f);
  EXPECT_THROW(parse_predicate("(predicate (index x y) (x (top)))"), ParseError);
  EXPECT_THROW(parse_function("(function (domain x) (codomain y) (map (x z)))"), ParseError);
}
