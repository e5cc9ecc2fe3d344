#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "herbrand/sets.hpp"
#include "herbrand/sigma.hpp"

namespace herbrand {

class InvalidAssembly : public Error {
public:
  using Error::Error;
};

/// (A, 𝒜, α) with A a finite set of labels and each α(a) an inhabited
/// upward-closed subset of !𝒜 given by its generators.
struct Assembly {
  std::string name;
  LabelSet carrier;
  Domain realizers = Domain::all();
  std::map<Label, Antichain> alpha;

  /// Validates: α total on the carrier, each α(a) inhabited, generators ⊆ 𝒜.
  static Assembly make(std::string name, LabelSet carrier, Domain realizers, std::map<Label, Antichain> alpha);

  const Antichain& at(const Label& a) const;
  /// α(a) as a truth value over 𝒜, for membership checks and probes.
  TruthValue value(const Label& a) const;
  /// Whether m ∈ α(a).
  bool realizes(const Label& a, const Term& m) const;

  std::string str() const;
  friend bool operator==(const Assembly& x, const Assembly& y) {
    return x.carrier == y.carrier && x.realizers == y.realizers && x.alpha == y.alpha;
  }
};

struct AsmMorphism {
  Assembly source;
  Assembly target;
  FunctionTable map;
  Term tracking = I();
  Ternary status = Ternary::unknown(Ternary::Reason::None, "not checked");

  const Label& operator()(const Label& x) const { return map(x); }
  std::string str() const;
};

/// Whether n tracks f : src → tgt. Constant trackings K v are decided
/// exactly; anything else is checked on probes.
Ternary check_tracking(const Assembly& src, const Assembly& tgt, const FunctionTable& f, const Term& n,
                       const CheckConfig& cfg = {});
Ternary check_tracking(const AsmMorphism& f, const CheckConfig& cfg = {});

/// Tries the identity, then the constant listing one generator of α(f b)
/// for every b. The constant tracks every function between finite carriers.
std::optional<Term> synthesize_tracking(const Assembly& src, const Assembly& tgt, const FunctionTable& f,
                                        const CheckConfig& cfg = {});

/// A morphism with its tracking checked; synthesized when none is given.
AsmMorphism make_morphism(const Assembly& src, const Assembly& tgt, const FunctionTable& f,
                          std::optional<Term> tracking = std::nullopt, const CheckConfig& cfg = {});

AsmMorphism identity(const Assembly& a);
/// g ∘ f, tracked by λm. n_g (n_f m).
AsmMorphism compose(const AsmMorphism& g, const AsmMorphism& f, const CheckConfig& cfg = {});

/// Both maps tracked and mutually inverse as functions.
Ternary check_iso(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg = {});
/// Iso along a bijection of carriers, with both trackings synthesized.
Ternary isomorphic_via(const Assembly& a, const Assembly& b, const FunctionTable& bijection,
                       const CheckConfig& cfg = {});

Label pair_label(const Label& a, const Label& b);
Label inl_label(const Label& a);
Label inr_label(const Label& b);

// ---------------------------------------------------------------------------
// Limits

Assembly terminal();
AsmMorphism to_terminal(const Assembly& a, const CheckConfig& cfg = {});

struct Product {
  Assembly object;
  AsmMorphism fst, snd;
  std::map<Label, std::pair<Label, Label>> components;
  /// Realizers 𝒜 ⊗ ℬ rather than 𝒜 & ℬ.
  bool tensor = false;
  /// ⟨f, g⟩ : C → A × B, tracked by λm. inv(p (r m) (s m)); synthesized
  /// for a tensor product.
  AsmMorphism pairing(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg = {}) const;
};
Product product(const Assembly& a, const Assembly& b, const CheckConfig& cfg = {});

struct Equalizer {
  Assembly object;
  AsmMorphism inclusion;
  /// The factorization of h through the inclusion.
  AsmMorphism lift(const AsmMorphism& h, const CheckConfig& cfg = {}) const;
};
Equalizer equalizer(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg = {});

/// Pullback of h : X → A and f : B → A, carrier { (x, b) : h x = f b }.
struct Pullback {
  Assembly object;
  AsmMorphism left, right;
};
Pullback pullback(const AsmMorphism& h, const AsmMorphism& f, const CheckConfig& cfg = {});

// ---------------------------------------------------------------------------
// Regular structure

bool is_mono(const AsmMorphism& f);
/// r defined on !𝒜_tgt into !𝒜_src, and for every a and n ∈ α(a) some b over
/// a with r·n ∈ β(b).
Ternary is_super_epi(const AsmMorphism& f, const Term& r, const CheckConfig& cfg = {});

struct Factorization {
  Assembly image;
  AsmMorphism super_epi, mono;
  Term super_epi_witness = I();
};
Factorization factorize(const AsmMorphism& f, const CheckConfig& cfg = {});

// ---------------------------------------------------------------------------
// Colimits

Assembly initial();
AsmMorphism from_initial(const Assembly& a, const CheckConfig& cfg = {});

struct Sum {
  Assembly object;
  AsmMorphism inl, inr;
  /// [f, g] : A + B → D, tracked by t(p x y) = r x ∗ s y.
  AsmMorphism copair(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg = {}) const;
};
Sum sum(const Assembly& a, const Assembly& b, const CheckConfig& cfg = {});

struct Coequalizer {
  Assembly object;
  AsmMorphism quotient;
  /// The map out of the quotient induced by h with h f = h g.
  AsmMorphism induced(const AsmMorphism& h, const CheckConfig& cfg = {}) const;
};
/// Classes are labelled by their least member.
Coequalizer coequalizer(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg = {});

// ---------------------------------------------------------------------------
// Dependent products along f : B → A of g : S → B

struct PiSection {
  Label a;
  std::map<Label, Label> section;  // B_a → S
  std::optional<Term> tracking;    // verified constant tracking, if found
};

struct Pi {
  Assembly object;
  AsmMorphism structure;  // (a, t) ↦ a
  Pullback pulled;        // T ×_A B
  AsmMorphism evaluation; // ((a, t), b) ↦ t(b), tracked by L
  std::vector<PiSection> sections;  // parallel to object.carrier
  std::vector<PiSection> excluded;  // genuine sections with no verified tracking
  AsmMorphism f, g;

  /// Given c : C → A and h : C ×_A B → S over B, the unique k : C → T.
  AsmMorphism mediator(const AsmMorphism& c, const Pullback& q, const AsmMorphism& h,
                       const CheckConfig& cfg = {}) const;
};
Pi pi_along(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg = {});

/// L(p(<n₁,…,n_k>, m)) = n₁(m) ∗ … ∗ n_k(m), reading n from the right part of a code over 𝒜 & Pool.
Term pi_evaluation_realizer();

// ---------------------------------------------------------------------------
// Natural numbers

constexpr std::size_t kDefaultNmax = 64;

Assembly nno(std::size_t n_max = kDefaultNmax);
/// The map rec(n) = sⁿ(z(*)), tracked by λM. cat(map (λn. iter n q (p <>)) M).
AsmMorphism nno_recursor(const AsmMorphism& z, const AsmMorphism& s, std::size_t n_max = kDefaultNmax,
                         const CheckConfig& cfg = {});

// ---------------------------------------------------------------------------
// ∇ and Γ

/// (X, {0}, ↑<0>), isomorphic to (X, 𝒫, !𝒫).
Assembly nabla(const LabelSet& x, const std::string& name = "nabla");
LabelSet gamma(const Assembly& a);
/// e ∈ 𝒜 and <e> ∈ α(a) for every a.
Ternary nabla_like(const Assembly& a, const Term& e);

// ---------------------------------------------------------------------------
// Partitioned assemblies

/// Every α(a) is ↑<g_a> for a single element g_a.
bool is_partitioned(const Assembly& a);
std::optional<Term> partition_generator(const Assembly& a, const Label& x);

/// Carrier A × B, realizers 𝒜 ⊗ ℬ, γ(a, b) = ↑<p g_a g_b>.
Product partitioned_product(const Assembly& a, const Assembly& b, const CheckConfig& cfg = {});

struct Cover {
  Assembly object;
  AsmMorphism projection;
  Term super_epi_witness = I();
};
/// A' = { (a, n) : n a generator code of α(a) }, 𝒜' = !𝒜, α'(a, n) = ↑<n>.
Cover partitioned_cover(const Assembly& a, const CheckConfig& cfg = {});

struct Retract {
  Assembly object;  // (A, ℬ, β f)
  AsmMorphism to, from;
};
/// For f : A → B, g : B → A with g f = id and B partitioned.
Retract retract_partitioned(const AsmMorphism& f, const AsmMorphism& g, const CheckConfig& cfg = {});

struct SectionResult {
  std::optional<AsmMorphism> section;
  Ternary verdict;
};
/// A section of the super epi p onto a partitioned assembly, tracked by
/// s·<m₁,…,m_k> = r·<m₁> ∗ … ∗ r·<m_k>.
SectionResult section_of_cover(const AsmMorphism& p, const Term& r, const CheckConfig& cfg = {});
Term section_tracking(const Term& r);

// ---------------------------------------------------------------------------

struct NamedVerdict {
  std::string name;
  Ternary verdict;
};

struct PreservationReport {
  std::vector<NamedVerdict> checks;
  bool ok() const;
};

/// ∇ of set-level products, sums, equalizers, a coequalizer and function
/// sets against the assembly-level constructions on ∇-images.
PreservationReport pretopos_preservation_suite(const LabelSet& x, const LabelSet& y, const CheckConfig& cfg = {});

// ---------------------------------------------------------------------------

struct Sexpr;
/// (assembly NAME (carrier a…) (domain D) (alpha (a (set t…)…)…))
Assembly assembly_from_sexpr(const Sexpr& e);
/// (morphism NAME (source A) (target B) (map (a b)…) [(tracking TERM)])
AsmMorphism morphism_from_sexpr(const Sexpr& e, const std::map<std::string, Assembly>& assemblies,
                                const CheckConfig& cfg = {});
std::string morphism_text(const std::string& name, const AsmMorphism& f);

}  // namespace herbrand
