#include "herbrand/truth.hpp"

#include <algorithm>
#include <sstream>

#include "herbrand/sexpr.hpp"
#include "herbrand/sigma.hpp"

namespace herbrand {

SupportSet make_support(std::vector<Term> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

Term code_of(const SupportSet& s) { return Term::seq(s); }

namespace {

bool includes(const SupportSet& big, const SupportSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool antichain_less(const SupportSet& a, const SupportSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Antichain::Antichain(std::vector<SupportSet> generators) {
  for (auto& g : generators) g = make_support(std::move(g));
  std::sort(generators.begin(), generators.end(), antichain_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Sorted by size, so any subset of g that survives precedes it.
  for (auto& g : generators) {
    bool dominated = std::any_of(members_.begin(), members_.end(),
                                 [&](const SupportSet& kept) { return includes(g, kept); });
    if (!dominated) members_.push_back(std::move(g));
  }
}

bool Antichain::covers_support(const SupportSet& s) const {
  return std::any_of(members_.begin(), members_.end(), [&](const SupportSet& g) { return includes(s, g); });
}

bool Antichain::covers(const Term& m) const { return covers_support(make_support({m.items().begin(), m.items().end()})); }

Antichain Antichain::unite(const Antichain& a, const Antichain& b) {
  std::vector<SupportSet> all = a.members_;
  all.insert(all.end(), b.members_.begin(), b.members_.end());
  return Antichain(std::move(all));
}

std::string Antichain::str() const {
  std::ostringstream os;
  os << "(gens";
  for (const auto& g : members_) {
    os << " (set";
    for (const auto& t : g) os << ' ' << t;
    os << ')';
  }
  os << ')';
  return os.str();
}

TruthValue TruthValue::top() {
  static const TruthValue t = [] {
    Node n;
    n.kind = Kind::Top;
    return TruthValue(std::make_shared<const Node>(std::move(n)));
  }();
  return t;
}

TruthValue TruthValue::bottom() {
  static const TruthValue t = [] {
    Node n;
    n.kind = Kind::Bottom;
    return TruthValue(std::make_shared<const Node>(std::move(n)));
  }();
  return t;
}

TruthValue TruthValue::atom(Domain potential, Antichain actual) {
  Node n;
  n.kind = Kind::Atom;
  n.potential = std::move(potential);
  n.actual = std::move(actual);
  return TruthValue(std::make_shared<const Node>(std::move(n)));
}

TruthValue TruthValue::conj_node(TruthValue l, TruthValue r) {
  Node n;
  n.kind = Kind::And;
  n.kids = {std::move(l), std::move(r)};
  return TruthValue(std::make_shared<const Node>(std::move(n)));
}

TruthValue TruthValue::disj_node(TruthValue l, TruthValue r) {
  Node n;
  n.kind = Kind::Or;
  n.kids = {std::move(l), std::move(r)};
  return TruthValue(std::make_shared<const Node>(std::move(n)));
}

TruthValue TruthValue::imp_node(TruthValue l, TruthValue r) {
  Node n;
  n.kind = Kind::Imp;
  n.kids = {std::move(l), std::move(r)};
  return TruthValue(std::make_shared<const Node>(std::move(n)));
}

TruthValue TruthValue::not_node(TruthValue t) {
  Node n;
  n.kind = Kind::Not;
  n.kids = {std::move(t)};
  return TruthValue(std::make_shared<const Node>(std::move(n)));
}

TruthValue TruthValue::forall_node(std::vector<TruthValue> fiber) {
  Node n;
  n.kind = Kind::Forall;
  n.kids = std::move(fiber);
  return TruthValue(std::make_shared<const Node>(std::move(n)));
}

Domain TruthValue::potential() const {
  switch (kind()) {
    case Kind::Top: return Domain::all();
    case Kind::Bottom: return Domain::finite({});
    case Kind::Atom: return *node_->potential;
    default: throw Error("potential carrier requested of a symbolic truth value: " + str());
  }
}

const Antichain& TruthValue::actual() const {
  static const Antichain everything({SupportSet{}});
  static const Antichain nothing;
  switch (kind()) {
    case Kind::Top: return everything;
    case Kind::Bottom: return nothing;
    case Kind::Atom: return node_->actual;
    default: throw Error("actual generators requested of a symbolic truth value: " + str());
  }
}

const TruthValue& TruthValue::left() const {
  if (!is(Kind::And) && !is(Kind::Or) && !is(Kind::Imp)) throw Error("not a binary connective: " + str());
  return node_->kids[0];
}

const TruthValue& TruthValue::right() const {
  if (!is(Kind::And) && !is(Kind::Or) && !is(Kind::Imp)) throw Error("not a binary connective: " + str());
  return node_->kids[1];
}

const TruthValue& TruthValue::operand() const {
  if (!is(Kind::Not)) throw Error("not a negation: " + str());
  return node_->kids[0];
}

const std::vector<TruthValue>& TruthValue::fiber() const {
  if (!is(Kind::Forall)) throw Error("not a universal: " + str());
  return node_->kids;
}

std::string TruthValue::str() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Top: return "(top)";
    case Kind::Bottom: return "(bot)";
    case Kind::Atom: {
      const Domain& d = *node_->potential;
      os << "(atom (a1";
      if (d.is_finite())
        for (const auto& t : d.elements()) os << ' ' << t;
      else
        os << ' ' << d.str();
      os << ") " << node_->actual.str() << ')';
      return os.str();
    }
    case Kind::And: return "(and " + left().str() + " " + right().str() + ")";
    case Kind::Or: return "(or " + left().str() + " " + right().str() + ")";
    case Kind::Imp: return "(imp " + left().str() + " " + right().str() + ")";
    case Kind::Not: return "(not " + operand().str() + ")";
    case Kind::Forall:
      os << "(forall";
      for (const auto& t : fiber()) os << ' ' << t.str();
      os << ')';
      return os.str();
  }
  return {};
}

bool operator==(const TruthValue& a, const TruthValue& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is(TruthValue::Kind::Atom))
    return *a.node_->potential == *b.node_->potential && a.node_->actual == b.node_->actual;
  return a.node_->kids == b.node_->kids;
}

std::ostream& operator<<(std::ostream& os, const TruthValue& t) { return os << t.str(); }

namespace {

bool is_domain_form(const Sexpr& e) {
  if (e.is_atom("all")) return true;
  static const char* heads[] = {"amp", "tensor", "bang", "union", "set"};
  return std::any_of(std::begin(heads), std::end(heads), [&](const char* h) { return e.head_is(h); });
}

}  // namespace

TruthValue truth_from_sexpr(const Sexpr& e) {
  if (!e.is_list || e.list.empty()) throw ParseError("expected a truth value", e.offset);
  const auto& h = e.head();
  auto arity = [&](std::size_t n) {
    if (e.list.size() != n + 1)
      throw ParseError("'" + h + "' expects " + std::to_string(n) + " argument(s)", e.offset);
  };
  if (h == "top") {
    arity(0);
    return TruthValue::top();
  }
  if (h == "bot") {
    arity(0);
    return TruthValue::bottom();
  }
  if (h == "and" || h == "or" || h == "imp") {
    arity(2);
    TruthValue l = truth_from_sexpr(e.list[1]), r = truth_from_sexpr(e.list[2]);
    if (h == "and") return TruthValue::conj_node(l, r);
    if (h == "or") return TruthValue::disj_node(l, r);
    return TruthValue::imp_node(l, r);
  }
  if (h == "not") {
    arity(1);
    return TruthValue::not_node(truth_from_sexpr(e.list[1]));
  }
  if (h == "forall") {
    std::vector<TruthValue> fiber;
    for (std::size_t i = 1; i < e.list.size(); ++i) fiber.push_back(truth_from_sexpr(e.list[i]));
    return TruthValue::forall_node(std::move(fiber));
  }
  if (h == "atom") {
    arity(2);
    const Sexpr& a1 = e.list[1];
    const Sexpr& gens = e.list[2];
    if (!a1.head_is("a1")) throw ParseError("expected (a1 ...)", a1.offset);
    if (!gens.head_is("gens")) throw ParseError("expected (gens ...)", gens.offset);
    Domain d = Domain::finite({});
    if (a1.list.size() == 2 && is_domain_form(a1.list[1])) {
      d = domain_from_sexpr(a1.list[1]);
    } else {
      std::vector<Term> xs;
      for (std::size_t i = 1; i < a1.list.size(); ++i) xs.push_back(term_from_sexpr(a1.list[i]));
      d = Domain::finite(std::move(xs));
    }
    std::vector<SupportSet> gs;
    for (std::size_t i = 1; i < gens.list.size(); ++i) {
      const Sexpr& g = gens.list[i];
      if (!g.head_is("set")) throw ParseError("expected (set ...)", g.offset);
      std::vector<Term> xs;
      for (std::size_t j = 1; j < g.list.size(); ++j) xs.push_back(term_from_sexpr(g.list[j]));
      gs.push_back(std::move(xs));
    }
    try {
      return mk_atom(std::move(gs), d);
    } catch (const InvalidAtom& err) {
      throw ParseError(err.what(), e.offset);
    }
  }
  throw ParseError("unknown truth value form '" + h + "'", e.offset);
}

TruthValue parse_truth(std::string_view text) { return truth_from_sexpr(read_sexpr(text)); }

}  // namespace herbrand
