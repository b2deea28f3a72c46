#pragma once

// Dual-pivot quicksort with exact comparison counting, the expected-cost
// recurrence, and the exact and asymptotic total-cost formulas.

#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dpqs/classify.hpp"
#include "dpqs/rational.hpp"
#include "dpqs/real.hpp"

namespace dpqs {

template <class T>
struct SortReport {
  std::vector<T> output;
  /// Pivot-ordering comparisons plus classification comparisons, summed over
  /// all recursive calls.
  std::uint64_t comparisons = 0;
};

/// Sorts with a_1 and a_n of every (sub)input as pivots. The partition is
/// stable, so each group keeps the relative order it had in the input and a
/// uniformly random input yields uniformly random subproblems.
///
/// Recursion is unrolled onto an explicit stack; sorted inputs are safe.
template <std::totally_ordered T>
SortReport<T> dual_pivot_sort(std::span<const T> input, StrategyKind strategy) {
  SortReport<T> report{std::vector<T>(input.begin(), input.end()), 0};
  std::vector<T>& a = report.output;

  std::vector<std::pair<std::size_t, std::size_t>> pending{{0, a.size()}};
  std::vector<T> small;
  std::vector<T> medium;
  std::vector<T> large;
  while (!pending.empty()) {
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    const std::size_t n = hi - lo;
    if (n < 2) continue;

    T p = a[lo];
    T q = a[hi - 1];
    ++report.comparisons;
    if (q < p) std::swap(p, q);

    const std::span<const T> rest(a.data() + lo + 1, n - 2);
    const ClassificationRun run = detail::classify_unchecked(strategy, rest, p, q);
    report.comparisons += run.cost.total();

    small.clear();
    medium.clear();
    large.clear();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      switch (run.labels[i]) {
        case ClassLabel::Small:
          small.push_back(rest[i]);
          break;
        case ClassLabel::Medium:
          medium.push_back(rest[i]);
          break;
        case ClassLabel::Large:
          large.push_back(rest[i]);
          break;
      }
    }

    std::size_t pos = lo;
    const std::size_t small_lo = pos;
    for (T& x : small) a[pos++] = std::move(x);
    a[pos++] = std::move(p);
    const std::size_t medium_lo = pos;
    for (T& x : medium) a[pos++] = std::move(x);
    a[pos++] = std::move(q);
    const std::size_t large_lo = pos;
    for (T& x : large) a[pos++] = std::move(x);

    pending.emplace_back(large_lo, hi);
    pending.emplace_back(medium_lo, medium_lo + medium.size());
    pending.emplace_back(small_lo, small_lo + small.size());
  }
  return report;
}

template <std::totally_ordered T>
SortReport<T> dual_pivot_sort(const std::vector<T>& input, StrategyKind strategy) {
  return dual_pivot_sort(std::span<const T>(input), strategy);
}

/// E{C_n} for 0 <= n <= n_max; entries 0 and 1 are zero.
class CostTable {
 public:
  explicit CostTable(std::vector<Rational> values) : values_(std::move(values)) {}

  const Rational& at(std::uint64_t n) const { return values_.at(n); }
  std::uint64_t max_n() const { return values_.size() - 1; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

using RationalSequence = std::function<Rational(std::uint64_t)>;

/// Solves E{C_n} = E{P_n} + 3/binom(n,2) sum_{k=1}^{n-2} (n-1-k) E{C_k}
/// by dynamic programming with running prefix sums (linear in n_max).
/// `partition_cost` is queried for 2 <= n <= n_max.
CostTable solve_recurrence(const RationalSequence& partition_cost, std::uint64_t n_max);

/// r_n = [n even]/320 (1/(n-3) + 3/(n-1)) - [n odd]/320 (3/(n-2) + 1/n), n >= 4.
Rational cost_remainder(std::uint64_t n);

/// The exact total-cost expression for n >= 4, with the remainder term
/// supplied by `remainder` (normally cost_remainder). Throws
/// std::domain_error for n < 4.
///
///   Clairvoyant: 9/5 nH_n + 1/5 nH^alt_n - 89/25 n + 77/40 H_n + 3/40 H^alt_n
///                + 67/800 - (-1)^n/10 + r_n
///   Count:       9/5 nH_n - 1/5 nH^alt_n - 89/25 n + 67/40 H_n - 3/40 H^alt_n
///                - 83/800 + (-1)^n/10 - r_n
Rational total_cost_closed_form(StrategyKind strategy, std::uint64_t n,
                                const RationalSequence& remainder = cost_remainder);

/// E{C_n}: the closed form for n >= 4, the recurrence below that.
Rational expected_total_cost(StrategyKind strategy, std::uint64_t n);

/// E{C_n} evaluated in floating point with compensated harmonic sums; for
/// sizes where the exact rational is too large to be practical.
template <class Real>
Real expected_total_cost_real(StrategyKind strategy, std::uint64_t n);

template <class Real>
struct AsymptoticConstants {
  Real a, b, c, d, e, f, g;
};

template <class Real>
AsymptoticConstants<Real> asymptotic_constants(StrategyKind strategy);

/// 9/5 n log n + A n + B log n + C + D/n + E/n^2 + (F [n even] + G)/n^3.
/// Throws std::domain_error for n < 2.
template <class Real>
Real asymptotic_total_cost(StrategyKind strategy, std::uint64_t n);

extern template double expected_total_cost_real<double>(StrategyKind, std::uint64_t);
extern template HighReal expected_total_cost_real<HighReal>(StrategyKind, std::uint64_t);
extern template AsymptoticConstants<double> asymptotic_constants<double>(StrategyKind);
extern template AsymptoticConstants<HighReal> asymptotic_constants<HighReal>(StrategyKind);
extern template double asymptotic_total_cost<double>(StrategyKind, std::uint64_t);
extern template HighReal asymptotic_total_cost<HighReal>(StrategyKind, std::uint64_t);

}  // namespace dpqs
