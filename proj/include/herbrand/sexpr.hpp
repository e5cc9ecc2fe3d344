#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "herbrand/term.hpp"

namespace herbrand {

// Minimal s-expression tree shared by every textual format in the project.
struct Sexpr {
  bool is_list = false;
  std::string atom;  // when !is_list
  std::vector<Sexpr> list;
  std::size_t offset = 0;

  bool is_atom(std::string_view a) const { return !is_list && atom == a; }
  bool head_is(std::string_view h) const {
    return is_list && !list.empty() && list.front().is_atom(h);
  }
  const std::string& head() const;
};

/// Reads exactly one expression; trailing non-whitespace is an error.
Sexpr read_sexpr(std::string_view text);
/// Reads a sequence of top-level expressions.
std::vector<Sexpr> read_sexprs(std::string_view text);

/// Atom text, quoted when it would not survive re-reading as a bare atom.
std::string quote_atom(std::string_view a);

Term term_from_sexpr(const Sexpr& e);

}  // namespace herbrand
