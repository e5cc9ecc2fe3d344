#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "herbrand/eval.hpp"
#include "herbrand/term.hpp"

namespace herbrand {

class UnboundVariable : public Error {
public:
  using Error::Error;
};

std::set<std::string> free_vars(const Term& t);

/// Capture-free substitution of a closed term for a variable.
Term substitute(const Term& body, const std::string& var, const Term& value);

/// Bracket abstraction. The result applied to `a` reduces to body[var := a].
/// Free variables of `body` other than `var` must be listed in `scope`.
Term abstract(const std::string& var, const Term& body, std::span<const std::string> scope = {});

/// Closed abstraction over several variables, outermost first.
Term lambda(std::initializer_list<std::string> vars, const Term& body);

inline Term v(const std::string& name) { return Term::var(name); }

// ---------------------------------------------------------------------------
// Sequence codes, meta level

Term seq_code(std::vector<Term> items);
std::size_t seq_len(const Term& t);
/// 1-based projection.
Term seq_proj(const Term& t, std::size_t i);
Term seq_concat(std::span<const Term> parts);
inline Term seq_concat(std::initializer_list<Term> parts) {
  return seq_concat(std::span<const Term>(parts.begin(), parts.size()));
}

/// Components of a sequence code as a sorted set of distinct terms.
std::vector<Term> support(const Term& t);

/// m ⪯ n: every component of m occurs among the components of n.
bool seq_leq(const Term& m, const Term& n);

// ---------------------------------------------------------------------------
// The same operations as closed terms of the algebra.

Term prim_term(Prim p);

}  // namespace herbrand
