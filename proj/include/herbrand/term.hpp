#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace herbrand {

/// Base class for contract violations raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Primitive operations built into the term model. Arity is the number of
// arguments consumed before the primitive contracts.
enum class Prim : std::uint8_t {
  Len,    // len s            -> (num |s|)
  Proj,   // proj s i         -> s_i, 1-based
  Cat,    // cat <s1,...,sk>  -> s1 * ... * sk
  Succ,   // succ n           -> n + 1
  Ncase,  // ncase n z f      -> z if n = 0, f m if n = m + 1
  Fst,    // fst (pair a b)   -> a
  Snd,    // snd (pair a b)   -> b
  Pair,   // pair a b         -> (pair a b)
  Cons,   // cons a <s...>    -> <a, s...>
  Map,    // map f <s...>     -> <f s1, ..., f sk>
  Iter,   // iter n f z       -> f (f (... z)), n times
};

int arity(Prim p);
std::string_view prim_name(Prim p);
std::optional<Prim> prim_from_name(std::string_view name);

/// Closed (or, inside abstraction bodies, open) expression of the
/// combinatory term model. Immutable, shared, cheap to copy.
class Term {
public:
  enum class Kind : std::uint8_t { S, K, Prim, Num, Var, App, Pair, Seq };

  static Term S();
  static Term K();
  static Term prim(Prim p);
  static Term num(std::uint64_t n);
  static Term var(std::string name);
  static Term app(Term fun, Term arg);
  static Term pair(Term first, Term second);
  static Term seq(std::vector<Term> items = {});

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  std::uint64_t number() const;        // Num
  Prim primitive() const;              // Prim
  const std::string& name() const;     // Var
  const Term& fun() const;             // App
  const Term& arg() const;             // App
  const Term& first() const;           // Pair
  const Term& second() const;          // Pair
  std::span<const Term> items() const; // Seq

  std::size_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }
  bool closed() const { return node_->closed; }

  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
  struct Node {
    Kind kind = Kind::S;
    std::uint64_t number = 0;
    Prim prim = Prim::Len;
    std::string name;
    std::vector<Term> kids;
    std::size_t hash = 0;
    std::size_t size = 1;
    bool closed = true;
  };
  static Node blank(Kind k) {
    Node n;
    n.kind = k;
    return n;
  }
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Node n);

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

/// Applies `f` to each argument in turn: ap(f, a, b) = (app (app f a) b).
Term ap(Term f, std::initializer_list<Term> args);

// Frequently used closed terms.
Term I();                 // S K K
Term empty_seq();         // <>
Term tag(std::uint64_t side, Term t);  // p side t, the & injection

/// Parses the canonical textual grammar. `(app f a b)` is accepted as
/// left-nested sugar; `(var x)` denotes an open variable.
Term parse_term(std::string_view text);

}  // namespace herbrand

template <>
struct std::hash<herbrand::Term> {
  std::size_t operator()(const herbrand::Term& t) const noexcept { return t.hash(); }
};
