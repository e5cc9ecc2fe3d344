#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "herbrand/eval.hpp"
#include "herbrand/ternary.hpp"
#include "herbrand/truth.hpp"

namespace herbrand {

class InvalidAtom : public Error {
public:
  using Error::Error;
};

/// Raised when actual inhabitation is asked of a value for which it is not
/// decidable by the structural rules.
class Undecidable : public Error {
public:
  using Error::Error;
};

/// Finite stand-ins for quantification over !A₁ and over the whole algebra.
struct ProbeConfig {
  std::size_t max_len = 2;
  /// Nesting of implications and universals explored before giving up.
  std::size_t max_depth = 3;
  /// Sample of the algebra used where A₁ is all of it.
  std::vector<Term> pool = {Term::num(0), Term::K(), Term::S(), Term::seq()};
  /// Inputs fed to functions whose argument is unconstrained.
  std::vector<Term> dummies = {Term::num(0), Term::K(), Term::seq()};
  /// Above this many elements, length-2 probes use consecutive pairs only.
  std::size_t dense_limit = 16;
};

struct CheckConfig {
  Fuel fuel;
  ProbeConfig probes;
};

/// Atom with A₀ = ↑gens. Collapses to Top or Bottom when it denotes one.
TruthValue mk_atom(std::vector<SupportSet> gens, Domain a1);

TruthValue conj(const TruthValue& a, const TruthValue& b);
TruthValue disj(const TruthValue& a, const TruthValue& b);
TruthValue imp(const TruthValue& a, const TruthValue& b);
TruthValue neg(const TruthValue& a);

/// Whether A₀ is nonempty. Throws Undecidable outside the structural rules.
bool inhabited(const TruthValue& t);
/// Actual inhabitation of ¬¬t, computed from the two-case description of ¬.
bool nn_actual_inhabited(const TruthValue& t);
/// <λp.<>>, the canonical actual realizer of ¬¬t when t is inhabited.
Term nn_witness();

Ternary potential_member(const TruthValue& t, const Term& m, const CheckConfig& cfg = {});
Ternary actual_member(const TruthValue& t, const Term& m, const CheckConfig& cfg = {});

/// Sequence codes that are potential (resp. actual) realizers of t.
std::vector<Term> potential_probes(const TruthValue& t, const ProbeConfig& cfg = {});
std::vector<Term> actual_probes(const TruthValue& t, const ProbeConfig& cfg = {});

/// Closed terms for !(A & B) ≅ !A ⊗ !B and back.
std::pair<Term, Term> exp_iso();

/// Meta-level versions: split a code of tagged items into its two sides;
/// nullopt when some item is not tagged 0 or 1.
std::optional<std::pair<Term, Term>> split_tagged(const Term& m);
Term join_tagged(const Term& x, const Term& y);

}  // namespace herbrand
