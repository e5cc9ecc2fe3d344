#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "herbrand/domain.hpp"
#include "herbrand/term.hpp"

namespace herbrand {

/// Finite set of canonical terms, kept sorted and duplicate-free.
using SupportSet = std::vector<Term>;

SupportSet make_support(std::vector<Term> elements);
/// The canonical sequence code listing a support set in order.
Term code_of(const SupportSet& s);

/// Minimal supports of an upward-closed family of sequence codes. The
/// family denoted is { m : support(m) ⊇ G for some member G }.
class Antichain {
public:
  Antichain() = default;
  explicit Antichain(std::vector<SupportSet> generators);

  const std::vector<SupportSet>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  /// Whether the support of code `m` includes some member.
  bool covers(const Term& m) const;
  bool covers_support(const SupportSet& s) const;

  /// Union of the two families (normalized).
  static Antichain unite(const Antichain& a, const Antichain& b);

  std::string str() const;
  friend bool operator==(const Antichain&, const Antichain&) = default;

private:
  std::vector<SupportSet> members_;
};

/// An element of Σ: exact finite atoms plus symbolic connectives whose
/// membership is checked against probes.
class TruthValue {
public:
  enum class Kind { Top, Bottom, Atom, And, Or, Imp, Not, Forall };

  static TruthValue top();
  static TruthValue bottom();
  /// Raw constructor; prefer mk_atom, which validates and canonicalizes.
  static TruthValue atom(Domain potential, Antichain actual);
  static TruthValue conj_node(TruthValue l, TruthValue r);
  static TruthValue disj_node(TruthValue l, TruthValue r);
  static TruthValue imp_node(TruthValue l, TruthValue r);
  static TruthValue not_node(TruthValue t);
  static TruthValue forall_node(std::vector<TruthValue> fiber);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  /// Top, Bottom and Atom all have an exact (A₁, A₀) description.
  bool is_atomic() const { return is(Kind::Top) || is(Kind::Bottom) || is(Kind::Atom); }
  Domain potential() const;      // atomic only
  const Antichain& actual() const;  // atomic only

  const TruthValue& left() const;       // And, Or, Imp
  const TruthValue& right() const;      // And, Or, Imp
  const TruthValue& operand() const;    // Not
  const std::vector<TruthValue>& fiber() const;  // Forall

  std::string str() const;
  friend bool operator==(const TruthValue& a, const TruthValue& b);

private:
  struct Node {
    Kind kind = Kind::Top;
    std::optional<Domain> potential;
    Antichain actual;
    std::vector<TruthValue> kids;
  };
  explicit TruthValue(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const TruthValue& t);

struct Sexpr;
TruthValue truth_from_sexpr(const Sexpr& e);
TruthValue parse_truth(std::string_view text);

}  // namespace herbrand
