#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.
// They work from the raw definitions and use none of the library's
// normalization or membership code.

#include <algorithm>
#include <set>
#include <vector>

#include "herbrand/term.hpp"

namespace oracle {

using herbrand::Term;

inline std::vector<Term> all_seqs(const std::vector<Term>& elems, std::size_t max_len) {
  std::vector<Term> out{Term::seq()};
  std::vector<std::vector<Term>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Term>> next;
    for (const auto& prefix : layer)
      for (const auto& e : elems) {
        auto s = prefix;
        s.push_back(e);
        out.push_back(Term::seq(s));
        next.push_back(std::move(s));
      }
    layer = std::move(next);
  }
  return out;
}

inline std::set<Term> components(const Term& m) { return {m.items().begin(), m.items().end()}; }

inline bool subset(const std::set<Term>& a, const std::set<Term>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Term& x) { return b.count(x) > 0; });
}

inline bool in_bang(const Term& m, const std::set<Term>& a1) {
  return m.is(Term::Kind::Seq) && subset(components(m), a1);
}

/// m ∈ ↑gens within !a1, from the definition of ⪯.
inline bool in_upset(const Term& m, const std::vector<std::set<Term>>& gens, const std::set<Term>& a1) {
  if (!in_bang(m, a1)) return false;
  auto sup = components(m);
  return std::any_of(gens.begin(), gens.end(), [&](const std::set<Term>& g) { return subset(g, sup); });
}

/// Every family of subsets of `elems`; each upward-closed set over a finite
/// carrier is generated by at least one of them.
inline std::vector<std::vector<std::set<Term>>> all_families(const std::vector<Term>& elems) {
  std::vector<std::set<Term>> subsets;
  for (std::size_t mask = 0; mask < (1u << elems.size()); ++mask) {
    std::set<Term> s;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (mask & (1u << i)) s.insert(elems[i]);
    subsets.push_back(std::move(s));
  }
  std::vector<std::vector<std::set<Term>>> out;
  for (std::size_t fam = 0; fam < (1u << subsets.size()); ++fam) {
    std::vector<std::set<Term>> f;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (fam & (1u << i)) f.push_back(subsets[i]);
    out.push_back(std::move(f));
  }
  return out;
}

/// Split of a code over A & B by hand: items p0a go left, p1b go right.
inline std::pair<Term, Term> split(const Term& m) {
  std::vector<Term> l, r;
  for (const auto& e : m.items()) (e.first().number() == 0 ? l : r).push_back(e.second());
  return {Term::seq(l), Term::seq(r)};
}

}  // namespace oracle
