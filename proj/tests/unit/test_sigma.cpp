#include <gtest/gtest.h>

#include "herbrand/pca.hpp"
#include "herbrand/sexpr.hpp"
#include "herbrand/sigma.hpp"
#include "support/oracles.hpp"

using namespace herbrand;

namespace {

Term num(std::uint64_t n) { return Term::num(n); }

const Term a = num(1), b = num(2), c = num(3), d = num(4);

std::vector<SupportSet> to_gens(const std::vector<std::set<Term>>& fam) {
  std::vector<SupportSet> out;
  for (const auto& s : fam) out.emplace_back(s.begin(), s.end());
  return out;
}

struct RawAtom {
  std::vector<Term> a1;
  std::vector<std::set<Term>> gens;
  TruthValue tv;
};

// Every atom over every carrier drawn from `universe` with at most 2 elements.
std::vector<RawAtom> small_atoms(const std::vector<Term>& universe) {
  std::vector<std::vector<Term>> carriers{{}};
  for (std::size_t i = 0; i < universe.size(); ++i) {
    carriers.push_back({universe[i]});
    for (std::size_t j = i + 1; j < universe.size(); ++j) carriers.push_back({universe[i], universe[j]});
  }
  std::vector<RawAtom> out;
  for (const auto& a1 : carriers)
    for (const auto& fam : oracle::all_families(a1))
      out.push_back({a1, fam, mk_atom(to_gens(fam), Domain::finite(a1))});
  return out;
}

Term eval(const Term& t) {
  auto r = normalize(t);
  EXPECT_TRUE(r.ok()) << t;
  return r.value;
}

}  // namespace

TEST(Atom, SingletonGenerator) {
  auto t = mk_atom({{a}}, Domain::finite({a}));
  ASSERT_TRUE(t.is(TruthValue::Kind::Atom));
  EXPECT_EQ(t.actual(), Antichain({{a}}));
  EXPECT_TRUE(actual_member(t, Term::seq({a})).exact());
  EXPECT_TRUE(actual_member(t, Term::seq({a, a})).exact());
  EXPECT_TRUE(actual_member(t, Term::seq()).is_fails());
}

TEST(Atom, EmptyGeneratorOverAllIsTop) {
  EXPECT_EQ(mk_atom({{}}, Domain::all()), TruthValue::top());
  EXPECT_EQ(mk_atom({}, Domain::finite({})), TruthValue::bottom());
  EXPECT_EQ(parse_truth("(atom (a1 all) (gens (set)))"), TruthValue::top());
  EXPECT_EQ(parse_truth("(atom (a1) (gens))"), TruthValue::bottom());
  // Same antichain over a different carrier is a different value.
  EXPECT_FALSE(mk_atom({}, Domain::finite({a})) == TruthValue::bottom());
}

TEST(Atom, AntichainCollapsesSupersets) {
  auto t = mk_atom({{a, b}, {a}}, Domain::finite({a, b}));
  EXPECT_EQ(t.actual().members(), (std::vector<SupportSet>{{a}}));
  std::vector<std::set<Term>> raw{{a, b}, {a}};
  std::set<Term> a1{a, b};
  for (const auto& m : oracle::all_seqs({a, b}, 3))
    EXPECT_EQ(actual_member(t, m).is_holds(), oracle::in_upset(m, raw, a1)) << m;
}

TEST(Atom, GeneratorOutsideCarrierRejected) {
  EXPECT_THROW(mk_atom({{a, c}}, Domain::finite({a, b})), InvalidAtom);
  EXPECT_THROW(parse_truth("(atom (a1 1) (gens (set 2)))"), ParseError);
}

TEST(Atom, MembershipMatchesOracleExhaustively) {
  std::vector<Term> universe{a, b, c};
  for (const auto& at : small_atoms(universe)) {
    std::set<Term> a1(at.a1.begin(), at.a1.end());
    for (const auto& m : oracle::all_seqs(universe, 3)) {
      EXPECT_EQ(potential_member(at.tv, m).is_holds(), oracle::in_bang(m, a1));
      auto r = actual_member(at.tv, m);
      EXPECT_EQ(r.is_holds(), oracle::in_upset(m, at.gens, a1)) << at.tv << " " << m;
      EXPECT_FALSE(r.is_unknown());
      if (r.is_holds()) EXPECT_TRUE(r.exact());
    }
  }
}

TEST(Atom, UpwardClosure) {
  std::vector<Term> universe{a, b};
  auto seqs = oracle::all_seqs(universe, 3);
  for (const auto& at : small_atoms(universe))
    for (const auto& m : seqs) {
      if (!actual_member(at.tv, m).is_holds()) continue;
      for (const auto& n : seqs)
        if (seq_leq(m, n) && potential_member(at.tv, n).is_holds())
          EXPECT_TRUE(actual_member(at.tv, n).is_holds()) << at.tv << " " << m << " " << n;
    }
}

TEST(Atom, NotInCarrierFails) {
  auto t = mk_atom({{a}}, Domain::finite({a}));
  auto r = actual_member(t, Term::seq({a, b}));
  ASSERT_TRUE(r.is_fails());
  EXPECT_EQ(*r.witness(), Term::seq({a, b}));
  EXPECT_TRUE(potential_member(t, a).is_fails());
}

TEST(Top, EverySequenceIsPotential) {
  for (const auto& m : oracle::all_seqs({a, Term::K(), Term::S(), Term::seq()}, 2))
    EXPECT_TRUE(potential_member(TruthValue::top(), m).exact());
  EXPECT_TRUE(potential_member(TruthValue::top(), a).is_fails());
  EXPECT_TRUE(actual_member(TruthValue::top(), Term::seq()).exact());
}

TEST(Connectives, ConjExample) {
  auto t = conj(mk_atom({{a}}, Domain::finite({a})), mk_atom({{b}}, Domain::finite({b})));
  EXPECT_EQ(t.potential(), Domain::finite({tag(0, a), tag(1, b)}));
  EXPECT_EQ(t.actual().members(), (std::vector<SupportSet>{make_support({tag(0, a), tag(1, b)})}));
}

TEST(Connectives, DisjExample) {
  auto t = disj(mk_atom({{a}}, Domain::finite({a})), mk_atom({{b}}, Domain::finite({b})));
  EXPECT_EQ(t.actual().members(), (std::vector<SupportSet>{{tag(0, a)}, {tag(1, b)}}));
}

TEST(Connectives, ConjDisjMatchOracle) {
  auto left = small_atoms({a, b});
  auto right = small_atoms({c, d});
  for (const auto& x : left)
    for (const auto& y : right) {
      std::set<Term> xa(x.a1.begin(), x.a1.end()), ya(y.a1.begin(), y.a1.end());
      std::vector<Term> amp;
      for (const auto& e : x.a1) amp.push_back(tag(0, e));
      for (const auto& e : y.a1) amp.push_back(tag(1, e));
      auto cj = conj(x.tv, y.tv);
      auto dj = disj(x.tv, y.tv);
      for (const auto& m : oracle::all_seqs(amp, 3)) {
        auto [l, r] = oracle::split(m);
        bool lo = oracle::in_upset(l, x.gens, xa), ro = oracle::in_upset(r, y.gens, ya);
        ASSERT_EQ(actual_member(cj, m).is_holds(), lo && ro) << cj << " " << m;
        ASSERT_EQ(actual_member(dj, m).is_holds(), lo || ro) << dj << " " << m;
        ASSERT_TRUE(potential_member(cj, m).is_holds());
      }
    }
}

TEST(Connectives, OrNodePairView) {
  auto phi = mk_atom({{a}}, Domain::finite({a, b}));
  auto psi = mk_atom({{c}}, Domain::finite({c, d}));
  auto t = TruthValue::disj_node(phi, psi);
  EXPECT_TRUE(actual_member(t, Term::pair(Term::seq({a}), Term::seq({d}))).exact());
  EXPECT_TRUE(actual_member(t, Term::pair(Term::seq({b}), Term::seq({d}))).is_fails());
  EXPECT_TRUE(actual_member(t, join_tagged(Term::seq({b}), Term::seq({c}))).exact());
  auto both_node = TruthValue::conj_node(phi, psi);
  EXPECT_TRUE(actual_member(both_node, Term::pair(Term::seq({a}), Term::seq({c}))).exact());
  EXPECT_TRUE(actual_member(both_node, Term::pair(Term::seq({a}), Term::seq({d}))).is_fails());
}

TEST(ExpIso, Examples) {
  auto [iso, inv] = exp_iso();
  EXPECT_TRUE(iso.closed());
  EXPECT_TRUE(inv.closed());
  EXPECT_EQ(eval(Term::app(iso, Term::seq())), Term::pair(Term::seq(), Term::seq()));
  Term m = Term::seq({tag(0, a), tag(1, b), tag(0, c)});
  EXPECT_EQ(eval(Term::app(iso, m)), Term::pair(Term::seq({a, c}), Term::seq({b})));
  EXPECT_TRUE(seq_leq(eval(Term::app(inv, Term::app(iso, m))), m));
  EXPECT_TRUE(seq_leq(m, eval(Term::app(inv, Term::app(iso, m)))));
}

TEST(ExpIso, RoundTripAndMonotoneExhaustive) {
  auto [iso, inv] = exp_iso();
  std::vector<Term> amp{tag(0, a), tag(0, b), tag(1, c), tag(1, d)};
  auto codes = oracle::all_seqs(amp, 3);
  auto pairs_leq = [](const Term& p, const Term& q) {
    return seq_leq(p.first(), q.first()) && seq_leq(p.second(), q.second());
  };
  std::vector<Term> images;
  for (const auto& m : codes) {
    Term im = eval(Term::app(iso, m));
    auto [l, r] = oracle::split(m);
    EXPECT_EQ(im, Term::pair(l, r));
    Term back = eval(Term::app(inv, im));
    EXPECT_TRUE(seq_leq(back, m) && seq_leq(m, back)) << m;
    images.push_back(im);
  }
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = 0; j < codes.size(); ++j)
      if (seq_leq(codes[i], codes[j])) ASSERT_TRUE(pairs_leq(images[i], images[j]));
  // The other direction over pairs of codes of length <= 2.
  auto lefts = oracle::all_seqs({a, b}, 2), rights = oracle::all_seqs({c, d}, 2);
  std::vector<Term> qs;
  for (const auto& l : lefts)
    for (const auto& r : rights) qs.push_back(Term::pair(l, r));
  for (const auto& q : qs) {
    Term there = eval(Term::app(inv, q));
    EXPECT_EQ(eval(Term::app(iso, there)), q);
    for (const auto& q2 : qs)
      if (pairs_leq(q, q2)) ASSERT_TRUE(seq_leq(there, eval(Term::app(inv, q2))));
  }
}

TEST(Negation, Examples) {
  EXPECT_FALSE(nn_actual_inhabited(mk_atom({}, Domain::finite({a}))));
  EXPECT_TRUE(nn_actual_inhabited(TruthValue::top()));
  EXPECT_TRUE(actual_member(neg(neg(TruthValue::top())), nn_witness()).is_holds());
  EXPECT_TRUE(actual_member(neg(TruthValue::bottom()), nn_witness()).is_holds());
  EXPECT_TRUE(actual_member(neg(TruthValue::top()), nn_witness()).is_fails());
  EXPECT_TRUE(actual_member(neg(TruthValue::bottom()), Term::seq()).is_fails());
}

TEST(Negation, DoubleNegationLawExhaustive) {
  for (const auto& at : small_atoms({a, b})) {
    bool inh = !at.gens.empty();
    ASSERT_EQ(nn_actual_inhabited(at.tv), inh) << at.tv;
    auto r = actual_member(neg(neg(at.tv)), nn_witness());
    EXPECT_EQ(r.is_holds(), inh) << at.tv << " " << r.str();
    EXPECT_FALSE(r.is_unknown());
  }
}

TEST(Negation, NonConstantComponentChecked) {
  // Sends every code to <> but is not a constant.
  Term f = lambda({"m"}, ap(Term::prim(Prim::Cat),
                            {ap(Term::prim(Prim::Map), {Term::app(Term::K(), Term::seq()), v("m")})}));
  auto phi = mk_atom({}, Domain::finite({a}));
  auto r = actual_member(neg(phi), Term::seq({f}));
  EXPECT_TRUE(r.is_holds());
  EXPECT_FALSE(r.exact());
  EXPECT_TRUE(actual_member(neg(phi), Term::seq({I()})).is_fails());
}

TEST(Implication, ConstantAndIdentity) {
  auto phi = mk_atom({{a}}, Domain::finite({a, b}));
  auto psi = mk_atom({{c}}, Domain::finite({c}));
  auto t = imp(phi, psi);
  EXPECT_TRUE(actual_member(t, Term::seq({Term::app(Term::K(), Term::seq({c}))})).exact());
  EXPECT_TRUE(actual_member(t, Term::seq({Term::app(Term::K(), Term::seq())})).is_fails());
  auto id = actual_member(imp(phi, phi), Term::seq({I()}));
  EXPECT_TRUE(id.is_holds());
  EXPECT_FALSE(id.exact());
  auto bad = actual_member(t, Term::seq({I()}));
  ASSERT_TRUE(bad.is_fails());
  EXPECT_EQ(*bad.witness(), I());
}

TEST(Implication, DeepNestingIsUnknown) {
  auto phi = mk_atom({{a}}, Domain::finite({a}));
  TruthValue t = phi;
  for (int i = 0; i < 5; ++i) t = imp(t, t);
  auto r = potential_member(imp(t, t), Term::seq({I()}));
  EXPECT_TRUE(r.is_unknown());
  EXPECT_EQ(r.reason(), Ternary::Reason::ProbeLimit);
}

TEST(Implication, DivergenceIsFuelUnknown) {
  Term w = lambda({"x"}, ap(v("x"), {v("x")}));
  Term loop = lambda({"m"}, ap(w, {w}));
  auto phi = mk_atom({{a}}, Domain::finite({a}));
  auto r = potential_member(imp(phi, phi), Term::seq({loop}), CheckConfig{Fuel{2000}, {}});
  EXPECT_TRUE(r.is_unknown());
  EXPECT_EQ(r.reason(), Ternary::Reason::Fuel);
}

TEST(Inhabitation, StructuralRules) {
  auto yes = mk_atom({{a}}, Domain::finite({a}));
  auto no = mk_atom({}, Domain::finite({a}));
  EXPECT_TRUE(inhabited(imp(no, no)));
  EXPECT_FALSE(inhabited(imp(yes, no)));
  EXPECT_TRUE(inhabited(TruthValue::conj_node(yes, imp(yes, yes))));
  auto disjoint = mk_atom({{b}}, Domain::finite({b}));
  EXPECT_FALSE(inhabited(TruthValue::forall_node({yes, disjoint})));
  EXPECT_TRUE(inhabited(TruthValue::forall_node({yes, mk_atom({{a}}, Domain::finite({a, b}))})));
  EXPECT_THROW(inhabited(TruthValue::forall_node({imp(yes, yes)})), Undecidable);
}

TEST(Probes, AreMembers) {
  for (const auto& at : small_atoms({a, b})) {
    for (const auto& p : potential_probes(at.tv)) EXPECT_TRUE(potential_member(at.tv, p).is_holds());
    for (const auto& p : actual_probes(at.tv)) EXPECT_TRUE(actual_member(at.tv, p).is_holds());
    auto n = neg(at.tv);
    for (const auto& p : actual_probes(n)) EXPECT_TRUE(actual_member(n, p).is_holds()) << n << " " << p;
  }
}

TEST(Text, RoundTrip) {
  std::vector<TruthValue> vals{
      TruthValue::top(),
      TruthValue::bottom(),
      mk_atom({{a, b}, {c}}, Domain::finite({a, b, c})),
      mk_atom({{tag(0, a)}}, Domain::amp(Domain::finite({a}), Domain::all())),
      imp(TruthValue::conj_node(TruthValue::top(), mk_atom({{a}}, Domain::finite({a}))), neg(TruthValue::bottom())),
      TruthValue::forall_node({TruthValue::top(), TruthValue::bottom()}),
  };
  for (const auto& t : vals) {
    auto back = parse_truth(t.str());
    EXPECT_EQ(back, t) << t;
    EXPECT_EQ(back.str(), t.str());
  }
}
