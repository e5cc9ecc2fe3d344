#pragma once

#include <memory>
#include <string>
#include <vector>

#include "herbrand/term.hpp"

namespace herbrand {

/// A set of algebra elements used as the potential-realizer carrier A₁ of a
/// truth value or the realizer set of an assembly. Finite sets are explicit;
/// `all` stands for the whole algebra; the remaining forms are built by the
/// & and ⊗ operations, by !D, and by unions, and keep decidable membership
/// when their parts are infinite.
class Domain {
public:
  enum class Kind { Finite, All, Amp, Tensor, Bang, Union };

  static Domain finite(std::vector<Term> elements);
  static Domain all();
  static Domain amp(const Domain& left, const Domain& right);
  static Domain tensor(const Domain& left, const Domain& right);
  static Domain bang(const Domain& inner);
  static Domain unite(std::vector<Domain> parts);

  Kind kind() const { return node_->kind; }
  bool is_finite() const { return node_->kind == Kind::Finite; }
  bool is_all() const { return node_->kind == Kind::All; }
  /// Sorted, distinct; only for finite domains.
  const std::vector<Term>& elements() const;
  const std::vector<Domain>& parts() const { return node_->parts; }

  bool contains(const Term& t) const;
  /// m ∈ !D: m is a sequence code all of whose components lie in D.
  bool contains_code(const Term& m) const;
  bool subset_contains(const std::vector<Term>& support) const;

  /// Representative members: all elements of a finite domain, otherwise
  /// elements assembled from `pool` (the stand-in for the whole algebra).
  std::vector<Term> sample(const std::vector<Term>& pool) const;

  std::string str() const;

  friend bool operator==(const Domain& a, const Domain& b);

private:
  struct Node {
    Kind kind = Kind::Finite;
    std::vector<Term> elements;
    std::vector<Domain> parts;
  };
  explicit Domain(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Sexpr;
Domain domain_from_sexpr(const Sexpr& e);

}  // namespace herbrand
