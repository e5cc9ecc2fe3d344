#include "herbrand/term.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

#include "herbrand/sexpr.hpp"

namespace herbrand {

namespace {

struct PrimInfo {
  Prim prim;
  std::string_view name;
  int arity;
};

constexpr std::array<PrimInfo, 11> kPrims{{
    {Prim::Len, "len", 1},
    {Prim::Proj, "proj", 2},
    {Prim::Cat, "cat", 1},
    {Prim::Succ, "succ", 1},
    {Prim::Ncase, "ncase", 3},
    {Prim::Fst, "fst", 1},
    {Prim::Snd, "snd", 1},
    {Prim::Pair, "pair", 2},
    {Prim::Cons, "cons", 2},
    {Prim::Map, "map", 2},
    {Prim::Iter, "iter", 3},
}};

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

int arity(Prim p) { return kPrims[static_cast<std::size_t>(p)].arity; }

std::string_view prim_name(Prim p) { return kPrims[static_cast<std::size_t>(p)].name; }

std::optional<Prim> prim_from_name(std::string_view name) {
  for (const auto& info : kPrims)
    if (info.name == name) return info.prim;
  return std::nullopt;
}

Term Term::make(Node n) {
  std::size_t h = mix(0, static_cast<std::size_t>(n.kind));
  switch (n.kind) {
    case Kind::Num: h = mix(h, std::hash<std::uint64_t>{}(n.number)); break;
    case Kind::Prim: h = mix(h, static_cast<std::size_t>(n.prim)); break;
    case Kind::Var:
      h = mix(h, std::hash<std::string>{}(n.name));
      n.closed = false;
      break;
    default: break;
  }
  for (const auto& k : n.kids) {
    h = mix(h, k.hash());
    n.size += k.size();
    n.closed = n.closed && k.closed();
  }
  n.hash = h;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::S() {
  static const Term s = make(blank(Kind::S));
  return s;
}

Term Term::K() {
  static const Term k = make(blank(Kind::K));
  return k;
}

Term Term::prim(Prim p) {
  Node n = blank(Kind::Prim);
  n.prim = p;
  return make(std::move(n));
}

Term Term::num(std::uint64_t v) {
  Node n = blank(Kind::Num);
  n.number = v;
  return make(std::move(n));
}

Term Term::var(std::string name) {
  Node n = blank(Kind::Var);
  n.name = std::move(name);
  return make(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  Node n = blank(Kind::App);
  n.kids = {std::move(fun), std::move(arg)};
  return make(std::move(n));
}

Term Term::pair(Term first, Term second) {
  Node n = blank(Kind::Pair);
  n.kids = {std::move(first), std::move(second)};
  return make(std::move(n));
}

Term Term::seq(std::vector<Term> items) {
  Node n = blank(Kind::Seq);
  n.kids = std::move(items);
  return make(std::move(n));
}

std::uint64_t Term::number() const {
  if (!is(Kind::Num)) throw Error("not a numeral: " + str());
  return node_->number;
}

Prim Term::primitive() const {
  if (!is(Kind::Prim)) throw Error("not a primitive: " + str());
  return node_->prim;
}

const std::string& Term::name() const {
  if (!is(Kind::Var)) throw Error("not a variable: " + str());
  return node_->name;
}

const Term& Term::fun() const {
  if (!is(Kind::App)) throw Error("not an application: " + str());
  return node_->kids[0];
}

const Term& Term::arg() const {
  if (!is(Kind::App)) throw Error("not an application: " + str());
  return node_->kids[1];
}

const Term& Term::first() const {
  if (!is(Kind::Pair)) throw Error("not a pair: " + str());
  return node_->kids[0];
}

const Term& Term::second() const {
  if (!is(Kind::Pair)) throw Error("not a pair: " + str());
  return node_->kids[1];
}

std::span<const Term> Term::items() const {
  if (!is(Kind::Seq)) throw Error("not a sequence code: " + str());
  return node_->kids;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::Num:
      return a.node_->number <=> b.node_->number;
    case Term::Kind::Prim:
      return a.node_->prim <=> b.node_->prim;
    case Term::Kind::Var:
      return a.node_->name <=> b.node_->name;
    default:
      break;
  }
  const auto& x = a.node_->kids;
  const auto& y = b.node_->kids;
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

namespace {

void print(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::S: os << 'S'; return;
    case Term::Kind::K: os << 'K'; return;
    case Term::Kind::Prim: os << prim_name(t.primitive()); return;
    case Term::Kind::Num: os << "(num " << t.number() << ')'; return;
    case Term::Kind::Var: os << "(var " << quote_atom(t.name()) << ')'; return;
    case Term::Kind::App:
      os << "(app ";
      print(os, t.fun());
      os << ' ';
      print(os, t.arg());
      os << ')';
      return;
    case Term::Kind::Pair:
      os << "(pair ";
      print(os, t.first());
      os << ' ';
      print(os, t.second());
      os << ')';
      return;
    case Term::Kind::Seq:
      os << "(seq";
      for (const auto& i : t.items()) {
        os << ' ';
        print(os, i);
      }
      os << ')';
      return;
  }
}

}  // namespace

std::string Term::str() const {
  std::ostringstream os;
  print(os, *this);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t);
  return os;
}

Term ap(Term f, std::initializer_list<Term> args) {
  for (const auto& a : args) f = Term::app(std::move(f), a);
  return f;
}

Term I() {
  static const Term i = ap(Term::S(), {Term::K(), Term::K()});
  return i;
}

Term empty_seq() {
  static const Term e = Term::seq();
  return e;
}

Term tag(std::uint64_t side, Term t) { return Term::pair(Term::num(side), std::move(t)); }

Term parse_term(std::string_view text) { return term_from_sexpr(read_sexpr(text)); }

}  // namespace herbrand
