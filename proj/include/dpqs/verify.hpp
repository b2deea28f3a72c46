#pragma once

// Cross-checks between closed forms and independent routes (enumeration,
// mixtures, the recurrence, exhaustive sorting). Each check reports the first
// counterexample it meets.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dpqs/classify.hpp"
#include "dpqs/rational.hpp"

namespace dpqs {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Caps for the individual suites.
inline constexpr std::uint64_t kIdentityCap = 500;
inline constexpr std::uint64_t kEnumerationMaxN = 14;
inline constexpr std::uint64_t kPointUniformityMaxN = 12;
inline constexpr std::uint64_t kVarlenMaxN = 60;
inline constexpr std::uint64_t kRecurrenceMaxN = 400;
inline constexpr std::uint64_t kPermutationMaxN = 8;

/// H^odd_{n+1} against both double sums (and the folded double sum) for n <= max_n.
CheckResult check_zero_identity(std::uint64_t max_n);

/// Enumeration-weighted means of zeros / up-to-zero / down-from-zero and the
/// full zero distribution against their closed forms for n <= max_n.
CheckResult check_path_enumeration(std::uint64_t max_n = kEnumerationMaxN);

/// Enumeration-derived pass-through probabilities against 1/(m+1).
CheckResult check_point_uniformity(std::uint64_t max_n = kPointUniformityMaxN);

/// Closed forms of E{X_up}, E{X_down} against the length mixtures, 2 <= n <= max_n.
CheckResult check_varlen_mixture(std::uint64_t max_n = kVarlenMaxN);

using TotalCostFn = std::function<Rational(StrategyKind, std::uint64_t)>;

/// The recurrence driven by the partition-cost lemma against `closed_form`
/// for 4 <= n <= max_n, both strategies.
CheckResult check_recurrence_closed_form(std::uint64_t max_n = kRecurrenceMaxN,
                                         const TotalCostFn& closed_form = TotalCostFn{});

/// Mean comparisons over all n! permutations of {1..n} against
/// expected_total_cost for 2 <= n <= max_n, both strategies.
CheckResult check_permutation_oracle(std::uint64_t max_n = kPermutationMaxN);

/// Exact mean of dual_pivot_sort comparisons over all permutations of {1..n}.
Rational exhaustive_mean_comparisons(StrategyKind strategy, std::uint64_t n);

/// Runs every suite; the identity suite goes up to identity_max_n. Throws
/// std::out_of_range if identity_max_n exceeds kIdentityCap.
std::vector<CheckResult> run_verify(std::uint64_t identity_max_n);

}  // namespace dpqs
