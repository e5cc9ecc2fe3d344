#include "herbrand/sigma.hpp"

#include <algorithm>
#include <unordered_set>

#include "herbrand/pca.hpp"

namespace herbrand {

namespace {

using Kind = TruthValue::Kind;

void push_unique(std::vector<Term>& out, std::unordered_set<Term>& seen, const Term& t) {
  if (seen.insert(t).second) out.push_back(t);
}

std::vector<Term> first_n(std::vector<Term> v, std::size_t n) {
  if (v.size() > n) v.erase(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
  return v;
}

// Cap on each side when probes of two components are combined.
constexpr std::size_t kSideWidth = 12;
// Cap on the constants offered as probes of a function space.
constexpr std::size_t kConstWidth = 6;

std::optional<Term> constant_value(const Term& c) {
  if (c.is(Term::Kind::App) && c.fun().is(Term::Kind::K)) return c.arg();
  return std::nullopt;
}

}  // namespace

TruthValue mk_atom(std::vector<SupportSet> gens, Domain a1) {
  for (const auto& g : gens)
    for (const auto& x : g)
      if (!a1.contains(x)) throw InvalidAtom("generator element " + x.str() + " is outside A1 " + a1.str());
  Antichain ac(std::move(gens));
  if (a1.is_all() && ac.size() == 1 && ac.members()[0].empty()) return TruthValue::top();
  if (a1.is_finite() && a1.elements().empty() && ac.empty()) return TruthValue::bottom();
  return TruthValue::atom(std::move(a1), std::move(ac));
}

namespace {

SupportSet tagged(std::uint64_t side, const SupportSet& g) {
  SupportSet out;
  for (const auto& x : g) out.push_back(tag(side, x));
  return out;
}

}  // namespace

TruthValue conj(const TruthValue& a, const TruthValue& b) {
  if (!a.is_atomic() || !b.is_atomic()) return TruthValue::conj_node(a, b);
  std::vector<SupportSet> gens;
  for (const auto& ga : a.actual().members())
    for (const auto& gb : b.actual().members()) {
      SupportSet u = tagged(0, ga);
      SupportSet r = tagged(1, gb);
      u.insert(u.end(), r.begin(), r.end());
      gens.push_back(std::move(u));
    }
  return mk_atom(std::move(gens), Domain::amp(a.potential(), b.potential()));
}

TruthValue disj(const TruthValue& a, const TruthValue& b) {
  if (!a.is_atomic() || !b.is_atomic()) return TruthValue::disj_node(a, b);
  std::vector<SupportSet> gens;
  for (const auto& ga : a.actual().members()) gens.push_back(tagged(0, ga));
  for (const auto& gb : b.actual().members()) gens.push_back(tagged(1, gb));
  return mk_atom(std::move(gens), Domain::amp(a.potential(), b.potential()));
}

TruthValue imp(const TruthValue& a, const TruthValue& b) { return TruthValue::imp_node(a, b); }

TruthValue neg(const TruthValue& a) { return TruthValue::not_node(a); }

namespace {

bool forall_inhabited(const std::vector<TruthValue>& fiber) {
  for (const auto& phi : fiber)
    if (!phi.is_atomic()) throw Undecidable("inhabitation of a universal over " + phi.str());
  // Search one generator per member whose union lies in every A₁.
  std::vector<std::size_t> choice(fiber.size(), 0);
  for (const auto& phi : fiber)
    if (phi.actual().empty()) return false;
  while (true) {
    std::vector<Term> u;
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      const auto& g = fiber[i].actual().members()[choice[i]];
      u.insert(u.end(), g.begin(), g.end());
    }
    bool ok = std::all_of(fiber.begin(), fiber.end(),
                          [&](const TruthValue& phi) { return phi.potential().subset_contains(u); });
    if (ok) return true;
    std::size_t i = 0;
    while (i < fiber.size() && ++choice[i] == fiber[i].actual().size()) choice[i++] = 0;
    if (i == fiber.size()) return false;
  }
}

}  // namespace

bool inhabited(const TruthValue& t) {
  switch (t.kind()) {
    case Kind::Top: return true;
    case Kind::Bottom: return false;
    case Kind::Atom: return !t.actual().empty();
    case Kind::And: return inhabited(t.left()) && inhabited(t.right());
    case Kind::Or: return inhabited(t.left()) || inhabited(t.right());
    case Kind::Imp: return !inhabited(t.left()) || inhabited(t.right());
    case Kind::Not: return !inhabited(t.operand());
    case Kind::Forall: return forall_inhabited(t.fiber());
  }
  return false;
}

bool nn_actual_inhabited(const TruthValue& t) { return inhabited(neg(neg(t))); }

Term nn_witness() { return Term::seq({abstract("p", Term::seq())}); }

std::optional<std::pair<Term, Term>> split_tagged(const Term& m) {
  if (!m.is(Term::Kind::Seq)) return std::nullopt;
  std::vector<Term> xs, ys;
  for (const auto& e : m.items()) {
    if (!e.is(Term::Kind::Pair) || !e.first().is(Term::Kind::Num)) return std::nullopt;
    auto side = e.first().number();
    if (side == 0)
      xs.push_back(e.second());
    else if (side == 1)
      ys.push_back(e.second());
    else
      return std::nullopt;
  }
  return std::make_pair(Term::seq(std::move(xs)), Term::seq(std::move(ys)));
}

Term join_tagged(const Term& x, const Term& y) {
  std::vector<Term> out;
  for (const auto& a : x.items()) out.push_back(tag(0, a));
  for (const auto& b : y.items()) out.push_back(tag(1, b));
  return Term::seq(std::move(out));
}

std::pair<Term, Term> exp_iso() {
  auto P = [](Prim p) { return Term::prim(p); };
  Term e = v("e"), m = v("m"), q = v("q");
  Term side = ap(P(Prim::Fst), {e});
  Term sel0 = lambda({"e"}, ap(P(Prim::Ncase), {side, Term::seq({ap(P(Prim::Snd), {e})}),
                                                  Term::app(Term::K(), Term::seq())}));
  Term sel1 = lambda({"e"}, ap(P(Prim::Ncase), {side, Term::seq(),
                                                  Term::app(Term::K(), Term::seq({ap(P(Prim::Snd), {e})}))}));
  Term iso = lambda({"m"}, ap(P(Prim::Pair), {ap(P(Prim::Cat), {ap(P(Prim::Map), {sel0, m})}),
                                              ap(P(Prim::Cat), {ap(P(Prim::Map), {sel1, m})})}));
  Term inv = lambda(
      {"q"},
      ap(P(Prim::Cat),
         {Term::seq({ap(P(Prim::Map), {ap(P(Prim::Pair), {Term::num(0)}), ap(P(Prim::Fst), {q})}),
                     ap(P(Prim::Map), {ap(P(Prim::Pair), {Term::num(1)}), ap(P(Prim::Snd), {q})})})}));
  return {iso, inv};
}

// ---------------------------------------------------------------------------
// Probes

namespace {

std::vector<Term> atomic_potential_probes(const TruthValue& t, const ProbeConfig& cfg) {
  const Domain d = t.potential();
  std::vector<Term> elems = d.is_finite() ? d.elements() : d.sample(cfg.pool);
  std::vector<Term> out;
  std::unordered_set<Term> seen;
  push_unique(out, seen, Term::seq());
  if (elems.size() <= cfg.dense_limit) {
    std::vector<std::vector<Term>> layer = {{}};
    for (std::size_t len = 1; len <= cfg.max_len; ++len) {
      std::vector<std::vector<Term>> next;
      for (const auto& s : layer)
        for (const auto& e : elems) {
          if (std::find(s.begin(), s.end(), e) != s.end()) continue;
          auto grown = s;
          grown.push_back(e);
          push_unique(out, seen, Term::seq(grown));
          next.push_back(std::move(grown));
        }
      layer = std::move(next);
    }
  } else {
    for (const auto& e : elems) push_unique(out, seen, Term::seq({e}));
    for (std::size_t len = 2; len <= cfg.max_len; ++len)
      for (std::size_t i = 0; i + len <= elems.size(); ++i)
        push_unique(out, seen, Term::seq(std::vector<Term>(elems.begin() + i, elems.begin() + i + len)));
  }
  for (const auto& g : t.actual().members()) {
    push_unique(out, seen, code_of(g));
    std::size_t extra = 0;
    for (const auto& e : elems) {
      if (std::binary_search(g.begin(), g.end(), e)) continue;
      if (elems.size() > cfg.dense_limit && ++extra > 2) break;
      auto grown = g;
      grown.push_back(e);
      push_unique(out, seen, Term::seq(grown));
    }
  }
  return out;
}

std::vector<Term> combine(const std::vector<Term>& xs, const std::vector<Term>& ys) {
  std::vector<Term> out;
  std::unordered_set<Term> seen;
  for (const auto& x : first_n(xs, kSideWidth))
    for (const auto& y : first_n(ys, kSideWidth)) push_unique(out, seen, join_tagged(x, y));
  return out;
}

std::vector<Term> constants_over(const std::vector<Term>& values) {
  std::vector<Term> out = {Term::seq()};
  auto vs = first_n(values, kConstWidth);
  for (const auto& x : vs) out.push_back(Term::seq({Term::app(Term::K(), x)}));
  if (vs.size() >= 2) out.push_back(Term::seq({Term::app(Term::K(), vs[0]), Term::app(Term::K(), vs[1])}));
  return out;
}

std::optional<bool> try_inhabited(const TruthValue& t) {
  try {
    return inhabited(t);
  } catch (const Undecidable&) {
    return std::nullopt;
  }
}

std::vector<Term> nonempty(std::vector<Term> v) {
  std::erase_if(v, [](const Term& m) { return m.items().empty(); });
  return v;
}

}  // namespace

std::vector<Term> potential_probes(const TruthValue& t, const ProbeConfig& cfg) {
  switch (t.kind()) {
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Atom: return atomic_potential_probes(t, cfg);
    case Kind::And:
    case Kind::Or: return combine(potential_probes(t.left(), cfg), potential_probes(t.right(), cfg));
    case Kind::Imp: return constants_over(potential_probes(t.right(), cfg));
    case Kind::Not: return constants_over({Term::seq()});
    case Kind::Forall: {
      if (t.fiber().empty()) return constants_over({Term::seq()});
      CheckConfig cc{Fuel{}, cfg};
      std::vector<Term> common;
      for (const auto& x : potential_probes(t.fiber()[0], cfg))
        if (std::all_of(t.fiber().begin(), t.fiber().end(),
                        [&](const TruthValue& phi) { return potential_member(phi, x, cc).is_holds(); }))
          common.push_back(x);
      return constants_over(common);
    }
  }
  return {};
}

std::vector<Term> actual_probes(const TruthValue& t, const ProbeConfig& cfg) {
  switch (t.kind()) {
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Atom: {
      auto out = atomic_potential_probes(t, cfg);
      Antichain ac = t.actual();
      std::erase_if(out, [&](const Term& m) { return !ac.covers(m); });
      return out;
    }
    case Kind::And: return combine(actual_probes(t.left(), cfg), actual_probes(t.right(), cfg));
    case Kind::Or: {
      auto out = combine(actual_probes(t.left(), cfg), potential_probes(t.right(), cfg));
      auto more = combine(potential_probes(t.left(), cfg), actual_probes(t.right(), cfg));
      std::unordered_set<Term> seen(out.begin(), out.end());
      for (const auto& m : more) push_unique(out, seen, m);
      return out;
    }
    case Kind::Imp:
    case Kind::Not: {
      const TruthValue& ante = t.is(Kind::Imp) ? t.left() : t.operand();
      if (try_inhabited(ante) == false) return nonempty(potential_probes(t, cfg));
      if (t.is(Kind::Not)) return {};
      return nonempty(constants_over(actual_probes(t.right(), cfg)));
    }
    case Kind::Forall: {
      if (t.fiber().empty()) return nonempty(constants_over({Term::seq()}));
      CheckConfig cc{Fuel{}, cfg};
      std::vector<Term> common;
      for (const auto& x : actual_probes(t.fiber()[0], cfg))
        if (std::all_of(t.fiber().begin(), t.fiber().end(),
                        [&](const TruthValue& phi) { return actual_member(phi, x, cc).is_holds(); }))
          common.push_back(x);
      return nonempty(constants_over(common));
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Membership

namespace {

class Checker {
public:
  explicit Checker(const CheckConfig& cfg) : cfg_(cfg) {}

  Ternary potential(const TruthValue& t, const Term& m, std::size_t depth) {
    switch (t.kind()) {
      case Kind::Top:
      case Kind::Bottom:
      case Kind::Atom:
        if (!m.is(Term::Kind::Seq)) return Ternary::fails(m, "not a sequence code");
        if (t.is(Kind::Top) || t.potential().contains_code(m)) return Ternary::holds();
        return Ternary::fails(m, "component outside A1");
      case Kind::And:
      case Kind::Or: {
        auto xy = view(m);
        if (!xy) return Ternary::fails(m, "not a pair of sequence codes");
        return both(potential(t.left(), xy->first, depth), potential(t.right(), xy->second, depth));
      }
      case Kind::Imp:
      case Kind::Not: {
        if (!m.is(Term::Kind::Seq)) return Ternary::fails(m, "not a sequence code");
        const TruthValue& ante = t.is(Kind::Imp) ? t.left() : t.operand();
        const TruthValue cons = t.is(Kind::Imp) ? t.right() : TruthValue::bottom();
        Ternary acc = Ternary::holds();
        for (const auto& c : m.items()) {
          acc = both(acc, in_function_space(ante, cons, c, depth));
          if (acc.is_fails()) return acc;
        }
        return acc;
      }
      case Kind::Forall: {
        if (!m.is(Term::Kind::Seq)) return Ternary::fails(m, "not a sequence code");
        Ternary acc = Ternary::holds();
        for (const auto& a : m.items()) {
          acc = both(acc, universal_component(t.fiber(), a, depth, false));
          if (acc.is_fails()) return acc;
        }
        return acc;
      }
    }
    return Ternary::fails(m);
  }

  Ternary actual(const TruthValue& t, const Term& m, std::size_t depth) {
    switch (t.kind()) {
      case Kind::Top:
      case Kind::Bottom:
      case Kind::Atom: {
        Ternary p = potential(t, m, depth);
        if (!p.is_holds()) return p;
        if (t.actual().covers(m)) return Ternary::holds();
        return Ternary::fails(m, "no generator below this code");
      }
      case Kind::And: {
        auto xy = view(m);
        if (!xy) return Ternary::fails(m, "not a pair of sequence codes");
        return both(actual(t.left(), xy->first, depth), actual(t.right(), xy->second, depth));
      }
      case Kind::Or: {
        auto xy = view(m);
        if (!xy) return Ternary::fails(m, "not a pair of sequence codes");
        Ternary p = both(potential(t.left(), xy->first, depth), potential(t.right(), xy->second, depth));
        if (!p.is_holds()) return p;
        Ternary a = either(actual(t.left(), xy->first, depth), actual(t.right(), xy->second, depth));
        if (a.is_fails()) return Ternary::fails(m, "neither side is actual");
        return both(p, a);
      }
      case Kind::Not:
        if (auto inh = try_inhabited(t.operand())) {
          Ternary p = potential(t, m, depth);
          if (!p.is_holds()) return p;
          if (*inh) return Ternary::fails(m, "the negated value is inhabited");
          if (m.items().empty()) return Ternary::fails(m, "empty sequence");
          return p;
        }
        [[fallthrough]];
      case Kind::Imp: {
        Ternary p = potential(t, m, depth);
        if (!p.is_holds()) return p;
        const TruthValue& ante = t.is(Kind::Imp) ? t.left() : t.operand();
        const TruthValue cons = t.is(Kind::Imp) ? t.right() : TruthValue::bottom();
        Ternary any = Ternary::fails(m, "no component maps actual realizers to actual realizers");
        for (const auto& c : m.items()) {
          Ternary g = preserves_actual(ante, cons, c, depth);
          any = any.is_fails() ? g : either(any, g);
          if (any.exact()) break;
        }
        if (any.is_fails()) return Ternary::fails(m, "no component maps actual realizers to actual realizers");
        return both(p, any);
      }
      case Kind::Forall: {
        Ternary p = potential(t, m, depth);
        if (!p.is_holds()) return p;
        Ternary any = Ternary::fails(m);
        for (const auto& a : m.items()) {
          Ternary g = universal_component(t.fiber(), a, depth, true);
          any = any.is_fails() ? g : either(any, g);
          if (any.exact()) break;
        }
        if (any.is_fails()) return Ternary::fails(m, "no component lands in every actual set");
        return both(p, any);
      }
    }
    return Ternary::fails(m);
  }

private:
  std::optional<std::pair<Term, Term>> view(const Term& m) {
    if (m.is(Term::Kind::Pair)) return std::make_pair(m.first(), m.second());
    return split_tagged(m);
  }

  // Result of c·x, or a verdict explaining why there is none.
  std::optional<Term> run(const Term& c, const Term& x, Ternary& verdict) {
    EvalResult r = apply(c, x, cfg_.fuel);
    if (r.ok()) return r.value;
    if (r.diverged())
      verdict = Ternary::unknown(Ternary::Reason::Fuel, "no value for " + c.str() + " on " + x.str());
    else
      verdict = Ternary::fails(c, "undefined on " + x.str() + ": " + r.reason);
    return std::nullopt;
  }

  // c ∈ { c : ∀m ∈ !ante₁, c·m↓ and c·m ∈ !cons₁ }
  Ternary in_function_space(const TruthValue& ante, const TruthValue& cons, const Term& c, std::size_t depth) {
    if (depth >= cfg_.probes.max_depth) return Ternary::unknown(Ternary::Reason::ProbeLimit, "nesting too deep");
    if (auto value = constant_value(c)) return potential(cons, *value, depth + 1);
    Ternary acc = Ternary::holds(false);
    for (const auto& x : potential_probes(ante, cfg_.probes)) {
      Ternary v = Ternary::holds();
      auto out = run(c, x, v);
      if (!out) return v;
      Ternary p = potential(cons, *out, depth + 1);
      if (p.is_fails()) return Ternary::fails(c, "sends potential " + x.str() + " to " + out->str());
      acc = both(acc, p);
    }
    return acc.probe_level();
  }

  Ternary preserves_actual(const TruthValue& ante, const TruthValue& cons, const Term& c, std::size_t depth) {
    if (depth >= cfg_.probes.max_depth) return Ternary::unknown(Ternary::Reason::ProbeLimit, "nesting too deep");
    if (auto value = constant_value(c)) {
      if (try_inhabited(ante) == false) return Ternary::holds();
      return actual(cons, *value, depth + 1);
    }
    Ternary acc = Ternary::holds(false);
    for (const auto& x : actual_probes(ante, cfg_.probes)) {
      Ternary v = Ternary::holds();
      auto out = run(c, x, v);
      if (!out) return v;
      Ternary a = actual(cons, *out, depth + 1);
      if (a.is_fails()) return Ternary::fails(c, "sends actual " + x.str() + " to " + out->str());
      acc = both(acc, a);
    }
    return acc.probe_level();
  }

  // a·b lands in !φ(x)₁ (or φ(x)₀ when `want_actual`) for every x and b.
  Ternary universal_component(const std::vector<TruthValue>& fiber, const Term& a, std::size_t depth,
                              bool want_actual) {
    if (fiber.empty()) return Ternary::holds();
    if (depth >= cfg_.probes.max_depth) return Ternary::unknown(Ternary::Reason::ProbeLimit, "nesting too deep");
    auto check = [&](const TruthValue& phi, const Term& y) {
      return want_actual ? actual(phi, y, depth + 1) : potential(phi, y, depth + 1);
    };
    if (auto value = constant_value(a)) {
      Ternary acc = Ternary::holds();
      for (const auto& phi : fiber) acc = both(acc, check(phi, *value));
      return acc;
    }
    Ternary acc = Ternary::holds(false);
    for (const auto& b : cfg_.probes.pool) {
      Ternary v = Ternary::holds();
      auto out = run(a, b, v);
      if (!out) return v;
      for (const auto& phi : fiber) {
        Ternary r = check(phi, *out);
        if (r.is_fails()) return Ternary::fails(a, "on " + b.str() + " gives " + out->str());
        acc = both(acc, r);
      }
    }
    return acc.probe_level();
  }

  const CheckConfig& cfg_;
};

// Membership is a property of algebra elements, so reduce the input first.
std::optional<Term> element(const Term& m, const CheckConfig& cfg, Ternary& verdict) {
  EvalResult r = normalize(m, cfg.fuel);
  if (r.ok()) return r.value;
  if (r.diverged())
    verdict = Ternary::unknown(Ternary::Reason::Fuel, "no normal form for " + m.str());
  else
    verdict = Ternary::fails(m, "not an element: " + r.reason);
  return std::nullopt;
}

}  // namespace

Ternary potential_member(const TruthValue& t, const Term& m, const CheckConfig& cfg) {
  Ternary verdict;
  auto e = element(m, cfg, verdict);
  if (!e) return verdict;
  return Checker(cfg).potential(t, *e, 0);
}

Ternary actual_member(const TruthValue& t, const Term& m, const CheckConfig& cfg) {
  Ternary verdict;
  auto e = element(m, cfg, verdict);
  if (!e) return verdict;
  return Checker(cfg).actual(t, *e, 0);
}

}  // namespace herbrand
