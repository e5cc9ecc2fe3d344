#pragma once

#include <cstdint>
#include <string>

#include "herbrand/term.hpp"

namespace herbrand {

/// Reduction step budget. Every S, K or primitive contraction costs one step.
struct Fuel {
  std::uint64_t steps = 10000;
};

/// Outcome of a fuel-bounded normalization.
struct EvalResult {
  enum class Status { Value, Diverged, Stuck };

  Status status = Status::Value;
  Term value = empty_seq();   // meaningful for Value
  std::string reason;         // meaningful for Stuck
  std::uint64_t steps = 0;

  bool ok() const { return status == Status::Value; }
  bool diverged() const { return status == Status::Diverged; }
  bool stuck() const { return status == Status::Stuck; }
};

/// Normal-order normalization: head redexes first, then arguments and the
/// components of pairs and sequence codes from left to right. The strategy
/// does not depend on the budget, so a larger budget never changes a Value.
EvalResult normalize(const Term& t, Fuel fuel = {});

/// Partial application of the algebra: normal form of `f a`.
EvalResult apply(const Term& f, const Term& a, Fuel fuel = {});

/// Normal form or an exception; for building realizers from known-total pieces.
Term normal_form(const Term& t, Fuel fuel = {});

}  // namespace herbrand
