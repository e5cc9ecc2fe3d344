#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "herbrand/principles.hpp"
#include "herbrand/tripos.hpp"

namespace herbrand {

/// Outcome counts of a demonstration suite plus one record per check.
struct SuiteReport {
  std::string name;
  std::size_t passed = 0, failed = 0, unknown = 0;
  std::vector<std::pair<std::string, Ternary>> records;

  void add(std::string what, Ternary verdict);
  bool ok() const { return failed == 0 && unknown == 0; }
};

/// Random atom-valued predicates (|A₁| ≤ 2) over index sets of size ≤ 3,
/// checked against the synthesized Heyting realizers.
SuiteReport heyting_suite(std::size_t pairs = 200, std::uint32_t seed = 1, const CheckConfig& cfg = {});
/// p(<λp.<>>, <λp.<>>) against every atom with |A₁| ≤ 2.
SuiteReport wlem_suite(const CheckConfig& cfg = {});
/// Round trips and trackings for every bound table up to `n_max` drawn at random.
SuiteReport bounded_suite(std::size_t n_max = 16, std::uint32_t seed = 1, const CheckConfig& cfg = {});
/// The full binary tree and a comb, to `depth`.
SuiteReport koenig_suite(std::size_t depth = 4, const CheckConfig& cfg = {});
SuiteReport fan_suite(const BarData& bar);
SuiteReport pretopos_suite(std::size_t nx = 2, std::size_t ny = 2, const CheckConfig& cfg = {});

/// Full binary tree of the given depth with A(x) ⟺ |x| ≥ d and payload <payload>.
BarData length_bar(std::size_t depth, std::size_t d, std::uint64_t payload);

}  // namespace herbrand
