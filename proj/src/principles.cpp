#include "herbrand/principles.hpp"

#include <algorithm>
#include <sstream>

#include "herbrand/pca.hpp"
#include "herbrand/sexpr.hpp"
#include "herbrand/tripos.hpp"

namespace herbrand {

namespace {

Term P(Prim p) { return Term::prim(p); }

std::string node_str(const FiniteTree::Node& n) {
  std::string out = "<";
  for (std::size_t i = 0; i < n.size(); ++i) out += (i ? "," : "") + std::to_string(n[i]);
  return out + ">";
}

std::uint64_t numeral(const Sexpr& e) {
  if (e.is_list || e.atom.empty() || !std::all_of(e.atom.begin(), e.atom.end(), ::isdigit))
    throw ParseError("expected a natural number", e.offset);
  return std::stoull(e.atom);
}

FiniteTree::Node node_from_sexpr(const Sexpr& e) {
  if (!e.head_is("node")) throw ParseError("expected (node …)", e.offset);
  FiniteTree::Node n;
  for (std::size_t i = 1; i < e.list.size(); ++i) n.push_back(numeral(e.list[i]));
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Trees

FiniteTree::FiniteTree(std::set<Node> nodes, std::vector<std::uint64_t> level_bound)
    : nodes_(std::move(nodes)), bound_(std::move(level_bound)) {
  if (!nodes_.count(Node{})) throw TreeError("tree does not contain the empty sequence");
  for (const auto& n : nodes_) {
    if (n.empty()) continue;
    Node parent(n.begin(), n.end() - 1);
    if (!nodes_.count(parent)) throw TreeError("tree is not closed under predecessors at " + node_str(n));
  }
}

FiniteTree FiniteTree::full(std::uint64_t branching, std::size_t depth) {
  if (branching == 0) throw TreeError("full tree needs at least one branch");
  std::set<Node> nodes{Node{}};
  std::vector<Node> layer{Node{}};
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<Node> next;
    for (const auto& n : layer)
      for (std::uint64_t x = 0; x < branching; ++x) {
        Node c = n;
        c.push_back(x);
        nodes.insert(c);
        next.push_back(std::move(c));
      }
    layer = std::move(next);
  }
  return FiniteTree(std::move(nodes), std::vector<std::uint64_t>(depth, branching - 1));
}

FiniteTree FiniteTree::comb(std::size_t depth) {
  std::set<Node> nodes{Node{}};
  Node spine;
  for (std::size_t k = 0; k < depth; ++k) {
    if (k + 1 < depth) {
      Node dead = spine;
      dead.push_back(0);
      nodes.insert(dead);
    }
    spine.push_back(1);
    nodes.insert(spine);
  }
  return FiniteTree(std::move(nodes), std::vector<std::uint64_t>(depth, 1));
}

std::size_t FiniteTree::depth() const {
  std::size_t d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.size());
  return d;
}

std::vector<FiniteTree::Node> FiniteTree::children(const Node& n) const {
  std::vector<Node> out;
  for (auto it = nodes_.lower_bound(n); it != nodes_.end() && it->size() >= n.size() &&
                                        std::equal(n.begin(), n.end(), it->begin());
       ++it)
    if (it->size() == n.size() + 1) out.push_back(*it);
  return out;
}

std::vector<FiniteTree::Node> FiniteTree::level(std::size_t len) const {
  std::vector<Node> out;
  for (const auto& n : nodes_)
    if (n.size() == len) out.push_back(n);
  return out;
}

std::optional<FiniteTree::Node> FiniteTree::bound_violation() const {
  for (const auto& n : nodes_) {
    if (n.empty()) continue;
    std::size_t k = n.size() - 1;
    if (k >= bound_.size() || n.back() > bound_[k]) return n;
  }
  return std::nullopt;
}

std::string FiniteTree::str() const {
  std::ostringstream os;
  os << "(tree (bound";
  for (auto z : bound_) os << ' ' << z;
  os << ')';
  for (const auto& n : nodes_) {
    os << " (node";
    for (auto x : n) os << ' ' << x;
    os << ')';
  }
  os << ')';
  return os.str();
}

Term node_code(const FiniteTree::Node& n) {
  std::vector<Term> items;
  for (auto x : n) items.push_back(Term::num(x));
  return Term::seq(std::move(items));
}

// ---------------------------------------------------------------------------
// Bounds and trackings

void BoundedFunction::validate() const {
  if (f.size() != g.size()) throw Error("function and bound tables differ in length");
  for (std::size_t n = 0; n < f.size(); ++n)
    if (f[n] > g[n]) throw Error("f(" + std::to_string(n) + ") exceeds its bound");
}

Term tracking_from_bound_term(const Term& g) {
  Term step = lambda({"s"}, ap(P(Prim::Cat), {Term::seq({v("s"), Term::seq({ap(P(Prim::Len), {v("s")})})})}));
  return lambda({"n"}, ap(P(Prim::Iter), {Term::app(g, v("n")), step, Term::seq({Term::num(0)})}));
}

Term tracking_from_bound(const std::vector<std::uint64_t>& g) {
  std::vector<Term> table;
  for (auto z : g) table.push_back(Term::num(z));
  Term lookup = lambda({"n"}, ap(P(Prim::Proj), {Term::seq(std::move(table)), ap(P(Prim::Succ), {v("n")})}));
  return tracking_from_bound_term(lookup);
}

Term tracking_from_bound(const BoundedFunction& b) {
  b.validate();
  return tracking_from_bound(b.g);
}

std::vector<std::uint64_t> bound_from_tracking(const Term& r, Fuel fuel, std::size_t n_max) {
  std::vector<std::uint64_t> g;
  for (std::size_t n = 0; n <= n_max; ++n) {
    EvalResult out = apply(r, Term::num(n), fuel);
    std::string at = " at " + std::to_string(n);
    if (out.diverged()) throw Error("tracking diverges" + at);
    if (out.stuck()) throw Error("tracking is undefined" + at + ": " + out.reason);
    if (!out.value.is(Term::Kind::Seq) || out.value.items().empty())
      throw Error("tracking gives no candidates" + at + ": " + out.value.str());
    std::uint64_t best = 0;
    for (const auto& c : out.value.items()) {
      if (!c.is(Term::Kind::Num)) throw Error("non-numeral component " + c.str() + at);
      best = std::max(best, c.number());
    }
    g.push_back(best);
  }
  return g;
}

Term lift_to_codes(const Term& r) { return exists_transpose_up(r); }

Ternary check_function_tracking(const std::vector<std::uint64_t>& f, const Term& r, const CheckConfig& cfg) {
  if (f.empty()) throw Error("empty function table");
  std::size_t top = f.size() - 1;
  std::size_t hi = std::max<std::size_t>(top, *std::max_element(f.begin(), f.end()));
  // Room for every candidate r may list on the tabulated inputs.
  for (std::size_t n = 0; n <= top; ++n) {
    EvalResult out = apply(r, Term::num(n), cfg.fuel);
    if (out.ok() && out.value.is(Term::Kind::Seq))
      for (const auto& c : out.value.items())
        if (c.is(Term::Kind::Num)) hi = std::max<std::size_t>(hi, c.number());
  }
  Assembly src = nno(top), tgt = nno(hi);
  std::map<Label, Label> t;
  for (std::size_t n = 0; n <= top; ++n) t[std::to_string(n)] = std::to_string(f[n]);
  return check_tracking(src, tgt, FunctionTable(src.carrier, tgt.carrier, t), lift_to_codes(r), cfg);
}

// ---------------------------------------------------------------------------
// Weak excluded middle

Term wlem_realizer() { return Term::pair(nn_witness(), nn_witness()); }

WlemReport wlem_check(const TruthValue& phi, const CheckConfig& cfg) {
  WlemReport rep;
  rep.inhabited = inhabited(phi);
  TruthValue n1 = neg(phi), n2 = neg(neg(phi));
  rep.verdict = actual_member(disj(n1, n2), wlem_realizer(), cfg);
  rep.left = actual_member(n1, nn_witness(), cfg);
  rep.right = actual_member(n2, nn_witness(), cfg);
  return rep;
}

Ternary de_morgan_check(const TruthValue& phi, const TruthValue& psi, const CheckConfig& cfg) {
  if (!inhabited(neg(conj(phi, psi)))) return Ternary::holds(true);
  return actual_member(disj(neg(phi), neg(psi)), wlem_realizer(), cfg);
}

// ---------------------------------------------------------------------------
// Trees and paths

Term uniform_path_realizer(const FiniteTree& t, std::size_t depth, const CheckConfig& cfg) {
  if (auto bad = t.bound_violation()) throw TreeError("node " + node_str(*bad) + " exceeds the branching bound");
  if (depth == 0) throw TreeError("paths need depth at least 1");
  if (depth > t.level_bound().size()) throw TreeError("no branching bound below level " + std::to_string(t.level_bound().size()));
  std::vector<std::uint64_t> f(t.level_bound().begin(), t.level_bound().begin() + static_cast<std::ptrdiff_t>(depth));
  Term r = tracking_from_bound(f);
  for (const auto& path : t.level(depth)) {
    Ternary ok = check_function_tracking(path, r, cfg);
    if (!ok.is_holds()) throw TreeError("path " + node_str(path) + " is not tracked: " + ok.str());
  }
  return r;
}

void BarData::validate() const {
  for (const auto& n : holds) {
    if (!tree.contains(n)) throw TreeError("A holds at " + node_str(n) + ", which is not in the tree");
    for (const auto& c : tree.children(n))
      if (!holds.count(c)) throw TreeError("A is not inherited from " + node_str(n) + " to " + node_str(c));
  }
  if (!payload.is(Term::Kind::Seq) || payload.items().empty()) throw TreeError("payload must be a nonempty code");
  for (const auto& c : payload.items())
    if (!c.is(Term::Kind::Num)) throw TreeError("payload component " + c.str() + " is not a numeral");
}

FanReport fan_bound_extract(const BarData& bar) {
  bar.validate();
  FanReport rep;
  for (const auto& c : bar.payload.items()) rep.bound = std::max(rep.bound, c.number());
  std::size_t d = bar.tree.depth();
  if (rep.bound > d) {
    rep.verdict = Ternary::unknown(Ternary::Reason::ProbeLimit, "bound exceeds the truncation depth");
    return rep;
  }
  for (const auto& path : bar.tree.level(d)) {
    FiniteTree::Node prefix(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(rep.bound));
    if (!bar.holds.count(prefix)) {
      rep.verdict = Ternary::fails(node_code(prefix), "A fails at " + node_str(prefix) + " on path " + node_str(path));
      return rep;
    }
  }
  rep.verdict = Ternary::holds(true);
  return rep;
}

KoenigResult koenig_path(const FiniteTree& t, std::size_t depth, const CheckConfig& cfg) {
  // Height of the subtree below each node, computed from the leaves up.
  std::map<FiniteTree::Node, std::size_t> reach;
  for (auto it = t.nodes().rbegin(); it != t.nodes().rend(); ++it) {
    std::size_t h = it->size();
    for (const auto& c : t.children(*it)) h = std::max(h, reach.at(c));
    reach[*it] = h;
  }
  if (reach.at({}) < depth) throw TreeError("tree has no node at depth " + std::to_string(depth));
  KoenigResult out;
  FiniteTree::Node cur;
  while (cur.size() < depth) {
    for (const auto& c : t.children(cur))
      if (reach.at(c) >= depth) {
        cur = c;
        break;
      }
  }
  out.path = cur;
  out.realizer = uniform_path_realizer(t, depth, cfg);
  out.verdict = check_function_tracking(out.path, out.realizer, cfg);
  return out;
}

// ---------------------------------------------------------------------------

FiniteTree tree_from_sexpr(const Sexpr& e) {
  if (!e.head_is("tree") || e.list.size() < 2 || !e.list[1].head_is("bound"))
    throw ParseError("expected (tree (bound …) (node …)…)", e.offset);
  std::vector<std::uint64_t> bound;
  for (std::size_t i = 1; i < e.list[1].list.size(); ++i) bound.push_back(numeral(e.list[1].list[i]));
  std::set<FiniteTree::Node> nodes;
  for (std::size_t i = 2; i < e.list.size(); ++i) nodes.insert(node_from_sexpr(e.list[i]));
  try {
    return FiniteTree(std::move(nodes), std::move(bound));
  } catch (const TreeError& err) {
    throw ParseError(err.what(), e.offset);
  }
}

BarData bar_from_sexpr(const Sexpr& e) {
  if (!e.head_is("bar") || e.list.size() != 4) throw ParseError("expected (bar TREE (holds …) (payload T))", e.offset);
  FiniteTree tree = tree_from_sexpr(e.list[1]);
  const Sexpr& h = e.list[2];
  if (!h.head_is("holds")) throw ParseError("expected (holds …)", h.offset);
  std::set<FiniteTree::Node> holds;
  for (std::size_t i = 1; i < h.list.size(); ++i) holds.insert(node_from_sexpr(h.list[i]));
  const Sexpr& p = e.list[3];
  if (!p.head_is("payload") || p.list.size() != 2) throw ParseError("expected (payload TERM)", p.offset);
  return BarData{std::move(tree), std::move(holds), term_from_sexpr(p.list[1])};
}

}  // namespace herbrand
