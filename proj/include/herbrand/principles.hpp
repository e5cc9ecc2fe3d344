#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "herbrand/assemblies.hpp"

namespace herbrand {

class TreeError : public Error {
public:
  using Error::Error;
};

/// A tree truncated at a finite depth, with a branching bound per level:
/// every child n ∗ <x> of a node n of length k has x ≤ bound(k).
class FiniteTree {
public:
  using Node = std::vector<std::uint64_t>;

  /// Throws TreeError unless the nodes contain <> and are closed under
  /// predecessors. The bound is not checked here.
  FiniteTree(std::set<Node> nodes, std::vector<std::uint64_t> level_bound);

  /// Every sequence over {0, …, k-1} of length ≤ depth.
  static FiniteTree full(std::uint64_t branching, std::size_t depth);
  /// A spine of 1s with a dead 0-branch at every spine node above the last level.
  static FiniteTree comb(std::size_t depth);

  const std::set<Node>& nodes() const { return nodes_; }
  const std::vector<std::uint64_t>& level_bound() const { return bound_; }
  bool contains(const Node& n) const { return nodes_.count(n) > 0; }
  /// Length of the longest node.
  std::size_t depth() const;
  std::vector<Node> children(const Node& n) const;
  /// Nodes of length exactly `len`, i.e. the prefixes ᾱlen of the paths.
  std::vector<Node> level(std::size_t len) const;
  /// A node whose children exceed the declared bound, if any.
  std::optional<Node> bound_violation() const;

  std::string str() const;

private:
  std::set<Node> nodes_;
  std::vector<std::uint64_t> bound_;
};

Term node_code(const FiniteTree::Node& n);

/// f(n) ≤ g(n) for n ≤ N, both tabulated.
struct BoundedFunction {
  std::vector<std::uint64_t> f;
  std::vector<std::uint64_t> g;

  /// Throws Error unless the tables have equal length and f ≤ g.
  void validate() const;
};

/// r with r·n = <0, 1, …, g(n)>, for g given as a closed term on numerals.
Term tracking_from_bound_term(const Term& g);
/// The same with g read off a table.
Term tracking_from_bound(const std::vector<std::uint64_t>& g);
Term tracking_from_bound(const BoundedFunction& b);

/// g(n) = max of the components of r·n for n ≤ n_max.
/// Throws Error naming n on divergence, non-numeral or empty output.
std::vector<std::uint64_t> bound_from_tracking(const Term& r, Fuel fuel, std::size_t n_max);

/// λM. cat(map r M): the element-level r as a tracking between copies of 𝒩.
Term lift_to_codes(const Term& r);

/// Whether r (element level) tracks the tabulated f : 𝒩 → 𝒩.
Ternary check_function_tracking(const std::vector<std::uint64_t>& f, const Term& r, const CheckConfig& cfg = {});

// ---------------------------------------------------------------------------

/// p(<λp.<>>, <λp.<>>)
Term wlem_realizer();

struct WlemReport {
  Ternary verdict;       // realizer ∈ (¬φ ∨ ¬¬φ)₀
  bool inhabited = false;
  Ternary left, right;   // <λp.<>> ∈ (¬φ)₀, ∈ (¬¬φ)₀
};

/// Throws Undecidable when φ's inhabitation is not decidable structurally.
WlemReport wlem_check(const TruthValue& phi, const CheckConfig& cfg = {});

/// When ¬(φ ∧ ψ) is actually realized, wlem_realizer() realizes ¬φ ∨ ¬ψ.
Ternary de_morgan_check(const TruthValue& phi, const TruthValue& psi, const CheckConfig& cfg = {});

// ---------------------------------------------------------------------------

/// The level bound of T as a tracking, checked against every path to `depth`.
/// Throws TreeError on a bound violation or when a path is not tracked.
Term uniform_path_realizer(const FiniteTree& t, std::size_t depth, const CheckConfig& cfg = {});

struct BarData {
  FiniteTree tree;
  std::set<FiniteTree::Node> holds;  // nodes where A holds
  Term payload = Term::seq();        // <n₁, …, n_k>

  /// A inherited by successors within the tree; payload a nonempty code of numerals.
  void validate() const;
};

struct FanReport {
  std::uint64_t bound = 0;
  Ternary verdict;  // Fails carries the first prefix ᾱn outside A
};

/// n = max(n₁, …, n_k), verified by checking A(ᾱn) on every path of the
/// truncated tree.
FanReport fan_bound_extract(const BarData& bar);

struct KoenigResult {
  std::vector<std::uint64_t> path;
  Term realizer = I();
  Ternary verdict;
};

/// Leftmost path to `depth` through nodes that extend to `depth`, with the
/// uniform realizer checked against it. Throws TreeError when T dies early.
KoenigResult koenig_path(const FiniteTree& t, std::size_t depth, const CheckConfig& cfg = {});

struct Sexpr;
/// (tree (bound z₀ z₁ …) (node) (node 0) (node 0 1) …)
FiniteTree tree_from_sexpr(const Sexpr& e);
/// (bar TREE (holds (node …)…) (payload TERM))
BarData bar_from_sexpr(const Sexpr& e);

}  // namespace herbrand
