#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "herbrand/sets.hpp"
#include "herbrand/sigma.hpp"

namespace herbrand {

class Unsupported : public Error {
public:
  using Error::Error;
};

/// A map from a finite index set into Σ.
class Predicate {
public:
  Predicate() = default;
  explicit Predicate(std::map<Label, TruthValue> values);
  static Predicate constant(const LabelSet& index, const TruthValue& t);

  const LabelSet& index() const { return index_; }
  const TruthValue& at(const Label& x) const;
  std::size_t size() const { return index_.size(); }

  std::string str() const;
  friend bool operator==(const Predicate&, const Predicate&) = default;

private:
  LabelSet index_;
  std::vector<TruthValue> values_;  // parallel to index_
};

Predicate conj(const Predicate& a, const Predicate& b);
Predicate disj(const Predicate& a, const Predicate& b);
Predicate imp(const Predicate& a, const Predicate& b);
Predicate neg(const Predicate& a);

/// f*ψ = ψ ∘ f for f : Y → X.
Predicate reindex(const FunctionTable& f, const Predicate& psi);

struct ProbeRecord {
  Label index;
  std::string clause;  // "potential" or "actual"
  Term input;
  std::optional<Term> output;
  Ternary verdict;
};

struct EntailmentReport {
  Term realizer = Term::seq();
  Ternary potential;
  Ternary actual;
  /// Index at which the first failure or unknown occurred.
  std::optional<Label> index;
  std::vector<ProbeRecord> transcript;

  Ternary verdict() const { return both(potential, actual); }
};

/// Whether r tracks φ ≤ ψ on every index and every probe.
EntailmentReport check_entailment(const Predicate& phi, const Predicate& psi, const Term& r,
                                  const CheckConfig& cfg = {});

// ---------------------------------------------------------------------------
// Realizers for the Heyting structure. All are closed terms.

Term synth_identity();
/// λn. s (r n)
Term synth_compose(const Term& r, const Term& s);
/// φ ≤ ⊤ and ⊥ ≤ φ.
Term synth_top_intro();
Term synth_bottom_elim();
/// φ∧ψ ≤ φ and φ∧ψ ≤ ψ.
Term synth_conj_fst();
Term synth_conj_snd();
/// From r : χ ≤ φ and s : χ ≤ ψ, a realizer of χ ≤ φ∧ψ.
Term synth_conj_pair(const Term& r, const Term& s);
/// φ ≤ φ∨ψ and ψ ≤ φ∨ψ.
Term synth_disj_inl();
Term synth_disj_inr();
/// From r : φ ≤ δ and s : ψ ≤ δ, t(p a b) = r a ∗ s b : φ∨ψ ≤ δ.
Term synth_disj_elim(const Term& r, const Term& s);
/// From r : χ∧φ ≤ ψ, a realizer of χ ≤ φ→ψ.
Term synth_curry(const Term& r);
/// From s : χ ≤ φ→ψ, a realizer of χ∧φ ≤ ψ.
Term synth_uncurry(const Term& s);
/// (φ→ψ)∧φ ≤ ψ: p <c₁,…,c_k> a ↦ c₁(a) ∗ … ∗ c_k(a).
Term synth_eval();

// ---------------------------------------------------------------------------
// Quantifiers along f : X → Y

/// Length bound on the codes making up ∃_f(φ)(y)₁ in exact mode.
struct ExistsConfig {
  std::size_t max_code_len = 3;
};

/// Exact ∃_f(φ) for atom-valued φ; Unsupported for symbolic values.
Predicate exists_along(const FunctionTable& f, const Predicate& phi, const ExistsConfig& cfg = {});
/// ∀_f(φ)(y) as a symbolic universal over the fiber.
Predicate forall_along(const FunctionTable& f, const Predicate& phi);

/// s(m) = r(<m>)
Term exists_transpose_down(const Term& r);
/// r(<m₁,…,m_k>) = s(m₁) ∗ … ∗ s(m_k)
Term exists_transpose_up(const Term& s);
/// s = λp.<λq. r p>
Term forall_transpose_up(const Term& r);
/// r = λp. (s p)₁(0) ∗ … ∗ (s p)_k(0)
Term forall_transpose_down(const Term& s);

/// Commuting square  q : P → X,  p : P → Z,  f : X → Y,  g : Z → Y
/// with f ∘ q = g ∘ p, required to be a pullback.
struct PullbackSquare {
  FunctionTable p, q, f, g;
};

/// The pullback of f and g, with P = { "z|x" : g z = f x }.
PullbackSquare pullback(const FunctionTable& f, const FunctionTable& g);

struct BeckChevalleyReport {
  /// g*∃_f φ and ∃_p q*φ agree atom for atom.
  bool exists_equal = false;
  std::vector<Label> exists_mismatches;
  /// Identity realizer in both directions between g*∀_f φ and ∀_p q*φ.
  Ternary forall_forward;
  Ternary forall_backward;

  bool ok() const { return exists_equal && !forall_forward.is_fails() && !forall_backward.is_fails(); }
};

BeckChevalleyReport beck_chevalley_check(const PullbackSquare& sq, const Predicate& phi,
                                         const CheckConfig& cfg = {}, const ExistsConfig& ecfg = {});

struct Sexpr;
/// (predicate (index x…) (x TV)…)
Predicate predicate_from_sexpr(const Sexpr& e);
Predicate parse_predicate(std::string_view text);

}  // namespace herbrand
