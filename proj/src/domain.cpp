#include "herbrand/domain.hpp"

#include <algorithm>
#include <sstream>

#include "herbrand/sexpr.hpp"

namespace herbrand {

namespace {

void sort_unique(std::vector<Term>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Bound on how many members of an infinite part feed a derived sample.
constexpr std::size_t kSampleWidth = 4;

}  // namespace

Domain Domain::finite(std::vector<Term> elements) {
  sort_unique(elements);
  Node n;
  n.kind = Kind::Finite;
  n.elements = std::move(elements);
  return Domain(std::make_shared<const Node>(std::move(n)));
}

Domain Domain::all() {
  static const Domain d = [] {
    Node n;
    n.kind = Kind::All;
    return Domain(std::make_shared<const Node>(std::move(n)));
  }();
  return d;
}

Domain Domain::amp(const Domain& left, const Domain& right) {
  if (left.is_finite() && right.is_finite()) {
    std::vector<Term> out;
    for (const auto& a : left.elements()) out.push_back(tag(0, a));
    for (const auto& b : right.elements()) out.push_back(tag(1, b));
    return finite(std::move(out));
  }
  Node n;
  n.kind = Kind::Amp;
  n.parts = {left, right};
  return Domain(std::make_shared<const Node>(std::move(n)));
}

Domain Domain::tensor(const Domain& left, const Domain& right) {
  if (left.is_finite() && right.is_finite()) {
    std::vector<Term> out;
    for (const auto& a : left.elements())
      for (const auto& b : right.elements()) out.push_back(Term::pair(a, b));
    return finite(std::move(out));
  }
  Node n;
  n.kind = Kind::Tensor;
  n.parts = {left, right};
  return Domain(std::make_shared<const Node>(std::move(n)));
}

Domain Domain::bang(const Domain& inner) {
  if (inner.is_finite() && inner.elements().empty()) return finite({Term::seq()});
  Node n;
  n.kind = Kind::Bang;
  n.parts = {inner};
  return Domain(std::make_shared<const Node>(std::move(n)));
}

Domain Domain::unite(std::vector<Domain> parts) {
  std::vector<Domain> flat;
  for (auto& p : parts) {
    if (p.is_all()) return all();
    if (p.kind() == Kind::Union)
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else
      flat.push_back(std::move(p));
  }
  std::vector<Term> merged;
  std::vector<Domain> symbolic;
  for (auto& p : flat) {
    if (p.is_finite())
      merged.insert(merged.end(), p.elements().begin(), p.elements().end());
    else if (std::find(symbolic.begin(), symbolic.end(), p) == symbolic.end())
      symbolic.push_back(p);
  }
  if (symbolic.empty()) return finite(std::move(merged));
  if (!merged.empty()) symbolic.insert(symbolic.begin(), finite(std::move(merged)));
  if (symbolic.size() == 1) return symbolic.front();
  Node n;
  n.kind = Kind::Union;
  n.parts = std::move(symbolic);
  return Domain(std::make_shared<const Node>(std::move(n)));
}

const std::vector<Term>& Domain::elements() const {
  if (!is_finite()) throw Error("domain is not finite: " + str());
  return node_->elements;
}

bool Domain::contains(const Term& t) const {
  switch (kind()) {
    case Kind::Finite: return std::binary_search(node_->elements.begin(), node_->elements.end(), t);
    case Kind::All: return true;
    case Kind::Amp:
      if (!t.is(Term::Kind::Pair) || !t.first().is(Term::Kind::Num)) return false;
      if (t.first().number() == 0) return parts()[0].contains(t.second());
      if (t.first().number() == 1) return parts()[1].contains(t.second());
      return false;
    case Kind::Tensor:
      return t.is(Term::Kind::Pair) && parts()[0].contains(t.first()) && parts()[1].contains(t.second());
    case Kind::Bang: return parts()[0].contains_code(t);
    case Kind::Union:
      return std::any_of(parts().begin(), parts().end(), [&](const Domain& d) { return d.contains(t); });
  }
  return false;
}

bool Domain::contains_code(const Term& m) const {
  if (!m.is(Term::Kind::Seq)) return false;
  auto items = m.items();
  return std::all_of(items.begin(), items.end(), [&](const Term& x) { return contains(x); });
}

bool Domain::subset_contains(const std::vector<Term>& support) const {
  return std::all_of(support.begin(), support.end(), [&](const Term& x) { return contains(x); });
}

std::vector<Term> Domain::sample(const std::vector<Term>& pool) const {
  std::vector<Term> out;
  auto head = [](std::vector<Term> v) {
    if (v.size() > kSampleWidth) v.erase(v.begin() + kSampleWidth, v.end());
    return v;
  };
  switch (kind()) {
    case Kind::Finite: return node_->elements;
    case Kind::All: out = pool; break;
    case Kind::Amp:
      for (const auto& a : head(parts()[0].sample(pool))) out.push_back(tag(0, a));
      for (const auto& b : head(parts()[1].sample(pool))) out.push_back(tag(1, b));
      break;
    case Kind::Tensor:
      for (const auto& a : head(parts()[0].sample(pool)))
        for (const auto& b : head(parts()[1].sample(pool))) out.push_back(Term::pair(a, b));
      break;
    case Kind::Bang: {
      auto inner = head(parts()[0].sample(pool));
      out.push_back(Term::seq());
      for (const auto& x : inner) out.push_back(Term::seq({x}));
      if (inner.size() >= 2) out.push_back(Term::seq({inner[0], inner[1]}));
      break;
    }
    case Kind::Union:
      for (const auto& d : parts()) {
        auto s = head(d.sample(pool));
        out.insert(out.end(), s.begin(), s.end());
      }
      break;
  }
  std::vector<Term> uniq;
  for (auto& t : out)
    if (std::find(uniq.begin(), uniq.end(), t) == uniq.end()) uniq.push_back(t);
  return uniq;
}

std::string Domain::str() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Finite:
      os << "(set";
      for (const auto& e : node_->elements) os << ' ' << e;
      os << ')';
      break;
    case Kind::All: os << "all"; break;
    case Kind::Amp: os << "(amp " << parts()[0].str() << ' ' << parts()[1].str() << ')'; break;
    case Kind::Tensor: os << "(tensor " << parts()[0].str() << ' ' << parts()[1].str() << ')'; break;
    case Kind::Bang: os << "(bang " << parts()[0].str() << ')'; break;
    case Kind::Union:
      os << "(union";
      for (const auto& d : parts()) os << ' ' << d.str();
      os << ')';
      break;
  }
  return os.str();
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->elements == b.node_->elements && a.node_->parts == b.node_->parts;
}

Domain domain_from_sexpr(const Sexpr& e) {
  if (e.is_atom("all")) return Domain::all();
  if (!e.is_list || e.list.empty()) throw ParseError("expected a domain", e.offset);
  const auto& h = e.head();
  auto sub = [&](std::size_t i) { return domain_from_sexpr(e.list.at(i)); };
  if (h == "set") {
    std::vector<Term> xs;
    for (std::size_t i = 1; i < e.list.size(); ++i) xs.push_back(term_from_sexpr(e.list[i]));
    return Domain::finite(std::move(xs));
  }
  if ((h == "amp" || h == "tensor") && e.list.size() == 3)
    return h == "amp" ? Domain::amp(sub(1), sub(2)) : Domain::tensor(sub(1), sub(2));
  if (h == "bang" && e.list.size() == 2) return Domain::bang(sub(1));
  if (h == "union") {
    std::vector<Domain> ds;
    for (std::size_t i = 1; i < e.list.size(); ++i) ds.push_back(sub(i));
    return Domain::unite(std::move(ds));
  }
  throw ParseError("malformed domain '" + h + "'", e.offset);
}

}  // namespace herbrand
