#include "herbrand/pca.hpp"

#include <algorithm>

namespace herbrand {

namespace {

void collect_free(const Term& t, std::set<std::string>& out) {
  if (t.closed()) return;
  switch (t.kind()) {
    case Term::Kind::Var: out.insert(t.name()); return;
    case Term::Kind::App:
      collect_free(t.fun(), out);
      collect_free(t.arg(), out);
      return;
    case Term::Kind::Pair:
      collect_free(t.first(), out);
      collect_free(t.second(), out);
      return;
    case Term::Kind::Seq:
      for (const auto& i : t.items()) collect_free(i, out);
      return;
    default: return;
  }
}

bool occurs(const std::string& x, const Term& t) {
  if (t.closed()) return false;
  switch (t.kind()) {
    case Term::Kind::Var: return t.name() == x;
    case Term::Kind::App: return occurs(x, t.fun()) || occurs(x, t.arg());
    case Term::Kind::Pair: return occurs(x, t.first()) || occurs(x, t.second());
    case Term::Kind::Seq:
      return std::any_of(t.items().begin(), t.items().end(), [&](const Term& i) { return occurs(x, i); });
    default: return false;
  }
}

Term bracket(const std::string& x, const Term& t) {
  if (!occurs(x, t)) return Term::app(Term::K(), t);
  switch (t.kind()) {
    case Term::Kind::Var:
      return I();
    case Term::Kind::App:
      if (t.arg().is(Term::Kind::Var) && t.arg().name() == x && !occurs(x, t.fun())) return t.fun();
      return ap(Term::S(), {bracket(x, t.fun()), bracket(x, t.arg())});
    case Term::Kind::Pair:
      return ap(Term::S(), {ap(Term::S(), {Term::app(Term::K(), Term::prim(Prim::Pair)), bracket(x, t.first())}),
                            bracket(x, t.second())});
    case Term::Kind::Seq: {
      auto items = t.items();
      Term rest = Term::seq(std::vector<Term>(items.begin() + 1, items.end()));
      return ap(Term::S(), {ap(Term::S(), {Term::app(Term::K(), Term::prim(Prim::Cons)), bracket(x, items[0])}),
                            bracket(x, rest)});
    }
    default:
      return Term::app(Term::K(), t);
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

Term substitute(const Term& body, const std::string& var, const Term& value) {
  if (!occurs(var, body)) return body;
  switch (body.kind()) {
    case Term::Kind::Var: return value;
    case Term::Kind::App: return Term::app(substitute(body.fun(), var, value), substitute(body.arg(), var, value));
    case Term::Kind::Pair:
      return Term::pair(substitute(body.first(), var, value), substitute(body.second(), var, value));
    case Term::Kind::Seq: {
      std::vector<Term> items;
      for (const auto& i : body.items()) items.push_back(substitute(i, var, value));
      return Term::seq(std::move(items));
    }
    default: return body;
  }
}

Term abstract(const std::string& var, const Term& body, std::span<const std::string> scope) {
  for (const auto& name : free_vars(body)) {
    if (name == var) continue;
    if (std::find(scope.begin(), scope.end(), name) == scope.end())
      throw UnboundVariable("unbound variable '" + name + "' in abstraction over '" + var + "'");
  }
  return bracket(var, body);
}

Term lambda(std::initializer_list<std::string> vars, const Term& body) {
  std::vector<std::string> names(vars);
  Term t = body;
  for (std::size_t i = names.size(); i-- > 0;) {
    std::span<const std::string> outer(names.data(), i);
    t = abstract(names[i], t, outer);
  }
  return t;
}

Term seq_code(std::vector<Term> items) { return Term::seq(std::move(items)); }

std::size_t seq_len(const Term& t) { return t.items().size(); }

Term seq_proj(const Term& t, std::size_t i) {
  auto items = t.items();
  if (i < 1 || i > items.size())
    throw Error("sequence index " + std::to_string(i) + " out of range 1.." + std::to_string(items.size()));
  return items[i - 1];
}

Term seq_concat(std::span<const Term> parts) {
  std::vector<Term> out;
  for (const auto& p : parts) {
    auto items = p.items();
    out.insert(out.end(), items.begin(), items.end());
  }
  return Term::seq(std::move(out));
}

std::vector<Term> support(const Term& t) {
  auto items = t.items();
  std::vector<Term> s(items.begin(), items.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool seq_leq(const Term& m, const Term& n) {
  auto big = n.items();
  for (const auto& x : m.items())
    if (std::find(big.begin(), big.end(), x) == big.end()) return false;
  return true;
}

Term prim_term(Prim p) { return Term::prim(p); }

}  // namespace herbrand
