#pragma once

#include <optional>
#include <string>

#include "herbrand/term.hpp"

namespace herbrand {

/// Outcome of a check whose domain of quantification may be infinite.
///
/// Holds is either exact (decided) or probe-level (no counterexample among
/// the probes tried). Fails always carries a concrete witness that can be
/// re-checked on its own. Unknown records why no verdict was reached.
class Ternary {
public:
  enum class Kind { Holds, Fails, Unknown };
  enum class Reason { None, Fuel, ProbeLimit };

  static Ternary holds(bool exact = true) {
    Ternary t;
    t.exact_ = exact;
    return t;
  }
  static Ternary fails(Term witness, std::string note = {}) {
    Ternary t;
    t.kind_ = Kind::Fails;
    t.witness_ = std::move(witness);
    t.note_ = std::move(note);
    return t;
  }
  static Ternary unknown(Reason reason, std::string note = {}) {
    Ternary t;
    t.kind_ = Kind::Unknown;
    t.reason_ = reason;
    t.note_ = std::move(note);
    return t;
  }

  Kind kind() const { return kind_; }
  bool is_holds() const { return kind_ == Kind::Holds; }
  bool is_fails() const { return kind_ == Kind::Fails; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }
  bool exact() const { return kind_ == Kind::Holds && exact_; }
  Reason reason() const { return reason_; }
  const std::optional<Term>& witness() const { return witness_; }
  const std::string& note() const { return note_; }

  /// Same verdict, demoted from exact to probe-level when it holds.
  Ternary probe_level() const {
    Ternary t = *this;
    t.exact_ = false;
    return t;
  }

  std::string str() const;

private:
  Kind kind_ = Kind::Holds;
  bool exact_ = true;
  Reason reason_ = Reason::None;
  std::optional<Term> witness_;
  std::string note_;
};

/// Conjunction of verdicts: the first failure wins, then the first unknown.
Ternary both(const Ternary& a, const Ternary& b);
/// Disjunction of verdicts: any holds wins (exact preferred), then unknown.
Ternary either(const Ternary& a, const Ternary& b);

std::string_view to_string(Ternary::Reason r);

}  // namespace herbrand
