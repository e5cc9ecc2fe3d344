#include "herbrand/suites.hpp"

#include <random>

#include "herbrand/pca.hpp"

namespace herbrand {

void SuiteReport::add(std::string what, Ternary verdict) {
  if (verdict.is_holds())
    ++passed;
  else if (verdict.is_fails())
    ++failed;
  else
    ++unknown;
  records.emplace_back(std::move(what), std::move(verdict));
}

namespace {

Ternary to_verdict(const EntailmentReport& r) { return r.verdict(); }

Ternary truth(bool b, const std::string& note) { return b ? Ternary::holds(true) : Ternary::fails(Term::seq(), note); }

struct AtomSource {
  explicit AtomSource(std::uint32_t seed) : rng(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  TruthValue atom() {
    std::vector<Term> pool{Term::num(1), Term::num(2), Term::num(3)};
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(below(3), Term::num(0));
    std::vector<SupportSet> gens;
    for (std::size_t i = 0, k = below(3); i < k; ++i) {
      SupportSet g;
      for (const auto& e : pool)
        if (below(2)) g.push_back(e);
      gens.push_back(std::move(g));
    }
    return mk_atom(std::move(gens), Domain::finite(pool));
  }

  Predicate predicate(const LabelSet& x) {
    std::map<Label, TruthValue> m;
    for (const auto& l : x) m.emplace(l, atom());
    return Predicate(std::move(m));
  }

  std::mt19937 rng;
};

LabelSet index_set(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return make_labels(out);
}

}  // namespace

SuiteReport heyting_suite(std::size_t pairs, std::uint32_t seed, const CheckConfig& cfg) {
  SuiteReport rep;
  rep.name = "heyting-laws";
  AtomSource src(seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    LabelSet x = index_set(1 + src.below(3));
    Predicate phi = src.predicate(x), psi = src.predicate(x);
    std::string tag = "#" + std::to_string(i) + " ";
    rep.add(tag + "conj-fst", to_verdict(check_entailment(conj(phi, psi), phi, synth_conj_fst(), cfg)));
    rep.add(tag + "conj-snd", to_verdict(check_entailment(conj(phi, psi), psi, synth_conj_snd(), cfg)));
    rep.add(tag + "conj-intro", to_verdict(check_entailment(conj(phi, psi), conj(phi, psi),
                                                            synth_conj_pair(synth_conj_fst(), synth_conj_snd()), cfg)));
    rep.add(tag + "disj-inl", to_verdict(check_entailment(phi, disj(phi, psi), synth_disj_inl(), cfg)));
    rep.add(tag + "disj-inr", to_verdict(check_entailment(psi, disj(phi, psi), synth_disj_inr(), cfg)));
    rep.add(tag + "disj-elim", to_verdict(check_entailment(disj(phi, psi), disj(psi, phi),
                                                           synth_disj_elim(synth_disj_inr(), synth_disj_inl()), cfg)));
    Term cur = synth_curry(synth_conj_snd());
    rep.add(tag + "curry", to_verdict(check_entailment(phi, imp(psi, psi), cur, cfg)));
    rep.add(tag + "uncurry", to_verdict(check_entailment(conj(phi, psi), psi, synth_uncurry(cur), cfg)));
    rep.add(tag + "eval", to_verdict(check_entailment(conj(imp(phi, psi), phi), psi, synth_eval(), cfg)));
  }
  return rep;
}

SuiteReport wlem_suite(const CheckConfig& cfg) {
  SuiteReport rep;
  rep.name = "wlem";
  const std::vector<Term> universe{Term::num(1), Term::num(2)};
  for (std::size_t mask = 0; mask < 4; ++mask) {
    std::vector<Term> a1;
    for (std::size_t i = 0; i < 2; ++i)
      if (mask & (1u << i)) a1.push_back(universe[i]);
    // Every antichain over a1: every family of subsets, normalized by mk_atom.
    std::size_t subsets = std::size_t{1} << a1.size();
    for (std::size_t fam = 0; fam < (std::size_t{1} << subsets); ++fam) {
      std::vector<SupportSet> gens;
      for (std::size_t s = 0; s < subsets; ++s) {
        if (!(fam & (std::size_t{1} << s))) continue;
        SupportSet g;
        for (std::size_t i = 0; i < a1.size(); ++i)
          if (s & (std::size_t{1} << i)) g.push_back(a1[i]);
        gens.push_back(std::move(g));
      }
      TruthValue phi = mk_atom(gens, Domain::finite(a1));
      WlemReport w = wlem_check(phi, cfg);
      Ternary side = truth(w.left.is_holds() == !w.inhabited && w.right.is_holds() == w.inhabited,
                           "witness on the wrong disjunct");
      rep.add(phi.str(), both(w.verdict, side));
    }
  }
  return rep;
}

SuiteReport bounded_suite(std::size_t n_max, std::uint32_t seed, const CheckConfig& cfg) {
  SuiteReport rep;
  rep.name = "bounded";
  std::mt19937 rng(seed);
  auto below = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (int i = 0; i < 20; ++i) {
    std::vector<std::uint64_t> g, f;
    for (std::size_t n = 0; n <= n_max; ++n) {
      g.push_back(below(17));
      f.push_back(below(g.back() + 1));
    }
    Term r = tracking_from_bound(g);
    rep.add("round trip #" + std::to_string(i), truth(bound_from_tracking(r, cfg.fuel, n_max) == g, "bound differs"));
    rep.add("tracks f #" + std::to_string(i), check_function_tracking(f, r, cfg));
  }
  return rep;
}

SuiteReport koenig_suite(std::size_t depth, const CheckConfig& cfg) {
  SuiteReport rep;
  rep.name = "koenig";
  auto full = koenig_path(FiniteTree::full(2, depth), depth, cfg);
  rep.add("full binary leftmost", both(full.verdict, truth(full.path == std::vector<std::uint64_t>(depth, 0), "not leftmost")));
  auto comb = koenig_path(FiniteTree::comb(depth), depth, cfg);
  rep.add("comb spine", both(comb.verdict, truth(comb.path == std::vector<std::uint64_t>(depth, 1), "not the spine")));
  return rep;
}

BarData length_bar(std::size_t depth, std::size_t d, std::uint64_t payload) {
  FiniteTree t = FiniteTree::full(2, depth);
  std::set<FiniteTree::Node> holds;
  for (const auto& n : t.nodes())
    if (n.size() >= d) holds.insert(n);
  return BarData{t, holds, Term::seq({Term::num(payload)})};
}

SuiteReport fan_suite(const BarData& bar) {
  SuiteReport rep;
  rep.name = "fan";
  FanReport f = fan_bound_extract(bar);
  rep.add("bound " + std::to_string(f.bound), f.verdict);
  return rep;
}

SuiteReport pretopos_suite(std::size_t nx, std::size_t ny, const CheckConfig& cfg) {
  SuiteReport rep;
  rep.name = "pretopos";
  std::vector<Label> x, y;
  for (std::size_t i = 0; i < nx; ++i) x.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < ny; ++i) y.push_back("y" + std::to_string(i));
  auto r = pretopos_preservation_suite(make_labels(x), make_labels(y), cfg);
  for (const auto& c : r.checks) rep.add(c.name, c.verdict);
  return rep;
}

}  // namespace herbrand
