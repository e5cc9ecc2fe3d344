#include "herbrand/sets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "herbrand/sexpr.hpp"

namespace herbrand {

LabelSet make_labels(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool has_label(const LabelSet& s, const Label& x) { return std::binary_search(s.begin(), s.end(), x); }

FunctionTable::FunctionTable(LabelSet domain, LabelSet codomain, std::map<Label, Label> table)
    : domain_(make_labels(std::move(domain))), codomain_(make_labels(std::move(codomain))), table_(std::move(table)) {
  for (const auto& x : domain_) {
    auto it = table_.find(x);
    if (it == table_.end()) throw Error("function is not defined on '" + x + "'");
    if (!has_label(codomain_, it->second))
      throw Error("function sends '" + x + "' to '" + it->second + "' outside its codomain");
  }
  for (const auto& [x, y] : table_)
    if (!has_label(domain_, x)) throw Error("function table mentions '" + x + "' outside its domain");
}

FunctionTable FunctionTable::identity(const LabelSet& s) {
  std::map<Label, Label> t;
  for (const auto& x : s) t[x] = x;
  return FunctionTable(s, s, std::move(t));
}

FunctionTable FunctionTable::constant(const LabelSet& domain, const LabelSet& codomain, const Label& value) {
  std::map<Label, Label> t;
  for (const auto& x : domain) t[x] = value;
  return FunctionTable(domain, codomain, std::move(t));
}

const Label& FunctionTable::operator()(const Label& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw Error("'" + x + "' is not in the domain");
  return it->second;
}

LabelSet FunctionTable::fiber(const Label& y) const {
  LabelSet out;
  for (const auto& x : domain_)
    if (table_.at(x) == y) out.push_back(x);
  return out;
}

LabelSet FunctionTable::image() const {
  std::vector<Label> out;
  for (const auto& [x, y] : table_) out.push_back(y);
  return make_labels(std::move(out));
}

bool FunctionTable::injective() const { return image().size() == domain_.size(); }

bool FunctionTable::surjective() const { return image().size() == codomain_.size(); }

std::string FunctionTable::str() const {
  std::ostringstream os;
  os << "(function " << labels_str("domain", domain_) << ' ' << labels_str("codomain", codomain_) << " (map";
  for (const auto& [x, y] : table_) os << " (" << quote_atom(x) << ' ' << quote_atom(y) << ')';
  os << "))";
  return os.str();
}

FunctionTable compose(const FunctionTable& g, const FunctionTable& f) {
  if (f.codomain() != g.domain()) throw Error("composite of functions whose sets do not match");
  std::map<Label, Label> t;
  for (const auto& x : f.domain()) t[x] = g(f(x));
  return FunctionTable(f.domain(), g.codomain(), std::move(t));
}

std::vector<FunctionTable> all_functions(const LabelSet& domain, const LabelSet& codomain) {
  std::vector<FunctionTable> out;
  if (codomain.empty() && !domain.empty()) return out;
  std::vector<std::size_t> idx(domain.size(), 0);
  while (true) {
    std::map<Label, Label> t;
    for (std::size_t i = 0; i < domain.size(); ++i) t[domain[i]] = codomain[idx[i]];
    out.emplace_back(domain, codomain, std::move(t));
    std::size_t i = domain.size();
    while (i > 0 && ++idx[i - 1] == codomain.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

LabelSet labels_from_sexpr(const Sexpr& e, std::string_view head) {
  if (!e.head_is(head)) throw ParseError("expected (" + std::string(head) + " ...)", e.offset);
  std::vector<Label> out;
  for (std::size_t i = 1; i < e.list.size(); ++i) {
    if (e.list[i].is_list) throw ParseError("expected a label", e.list[i].offset);
    out.push_back(e.list[i].atom);
  }
  auto set = make_labels(out);
  if (set.size() != out.size()) throw ParseError("duplicate label", e.offset);
  return set;
}

std::string labels_str(std::string_view head, const LabelSet& s) {
  std::string out = "(" + std::string(head);
  for (const auto& x : s) out += " " + quote_atom(x);
  return out + ")";
}

FunctionTable function_from_sexpr(const Sexpr& e) {
  if (!e.head_is("function") || e.list.size() != 4) throw ParseError("expected (function (domain …) (codomain …) (map …))", e.offset);
  LabelSet dom = labels_from_sexpr(e.list[1], "domain");
  LabelSet cod = labels_from_sexpr(e.list[2], "codomain");
  const Sexpr& m = e.list[3];
  if (!m.head_is("map")) throw ParseError("expected (map …)", m.offset);
  std::map<Label, Label> t;
  for (std::size_t i = 1; i < m.list.size(); ++i) {
    const Sexpr& p = m.list[i];
    if (!p.is_list || p.list.size() != 2 || p.list[0].is_list || p.list[1].is_list)
      throw ParseError("expected (x y)", p.offset);
    if (!t.emplace(p.list[0].atom, p.list[1].atom).second) throw ParseError("label mapped twice", p.offset);
  }
  try {
    return FunctionTable(dom, cod, std::move(t));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(err.what(), e.offset);
  }
}

FunctionTable parse_function(std::string_view text) { return function_from_sexpr(read_sexpr(text)); }

}  // namespace herbrand
