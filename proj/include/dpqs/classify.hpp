#pragma once

// Classification of the non-pivot elements of a dual-pivot partitioning step
// into small (< p), medium (between) and large (> q).
//
// Every element costs one comparison if it is compared with the "right" pivot
// first (small with p, large with q) and two otherwise; medium elements always
// cost two. A second comparison on a small or large element is an additional
// comparison. The two strategies differ only in which pivot they try first:
//
//   Clairvoyant: p first iff (small still to come) >= (large still to come).
//                The totals are read by an uncounted oracle pre-pass.
//   Count:       p first iff (small seen so far) >= (large seen so far).
//
// Elements are processed strictly left to right. Keys equal to a pivot are
// labeled Medium.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "dpqs/lattice_path.hpp"
#include "dpqs/rational.hpp"

namespace dpqs {

enum class StrategyKind { Clairvoyant, Count };

inline constexpr StrategyKind kAllStrategies[] = {StrategyKind::Clairvoyant, StrategyKind::Count};

std::string_view to_string(StrategyKind kind);
/// Accepts "clairvoyant" or "count".
std::optional<StrategyKind> parse_strategy(std::string_view name);

enum class ClassLabel : std::uint8_t { Small, Medium, Large };

struct CostBreakdown {
  std::uint64_t necessary = 0;
  std::uint64_t additional = 0;

  std::uint64_t total() const noexcept { return necessary + additional; }

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

struct ClassificationRun {
  std::vector<ClassLabel> labels;
  CostBreakdown cost;
  std::uint64_t small_count = 0;
  std::uint64_t large_count = 0;
};

namespace detail {

/// Classification without the p < q check; the sorter relies on this for
/// inputs whose two pivots are equal.
template <std::totally_ordered T>
ClassificationRun classify_unchecked(StrategyKind strategy, std::span<const T> elements, const T& p, const T& q) {
  ClassificationRun run;
  run.labels.reserve(elements.size());

  std::uint64_t small_total = 0;
  std::uint64_t large_total = 0;
  if (strategy == StrategyKind::Clairvoyant) {
    for (const T& x : elements) {
      if (x < p) ++small_total;
      if (q < x) ++large_total;
    }
  }

  std::uint64_t comparisons = 0;
  std::uint64_t small_seen = 0;
  std::uint64_t large_seen = 0;
  for (const T& x : elements) {
    const bool p_first = strategy == StrategyKind::Clairvoyant
                             ? small_total - small_seen >= large_total - large_seen
                             : small_seen >= large_seen;
    ClassLabel label;
    if (p_first) {
      ++comparisons;
      if (x < p) {
        label = ClassLabel::Small;
      } else {
        ++comparisons;
        label = q < x ? ClassLabel::Large : ClassLabel::Medium;
      }
    } else {
      ++comparisons;
      if (q < x) {
        label = ClassLabel::Large;
      } else {
        ++comparisons;
        label = x < p ? ClassLabel::Small : ClassLabel::Medium;
      }
    }
    if (label == ClassLabel::Small) ++small_seen;
    if (label == ClassLabel::Large) ++large_seen;
    run.labels.push_back(label);
  }

  run.small_count = small_seen;
  run.large_count = large_seen;
  const std::uint64_t medium = elements.size() - small_seen - large_seen;
  run.cost.necessary = small_seen + large_seen + 2 * medium;
  run.cost.additional = comparisons - run.cost.necessary;
  return run;
}

}  // namespace detail

/// Throws std::invalid_argument unless p < q.
template <std::totally_ordered T>
ClassificationRun classify(StrategyKind strategy, std::span<const T> elements, const T& p, const T& q) {
  if (!(p < q)) {
    throw std::invalid_argument("classify: pivots must satisfy p < q");
  }
  return detail::classify_unchecked(strategy, elements, p, q);
}

template <std::totally_ordered T>
ClassificationRun classify_clairvoyant(std::span<const T> elements, const T& p, const T& q) {
  return classify(StrategyKind::Clairvoyant, elements, p, q);
}

template <std::totally_ordered T>
ClassificationRun classify_count(std::span<const T> elements, const T& p, const T& q) {
  return classify(StrategyKind::Count, elements, p, q);
}

/// The walk of suffix differences d_i = (small after position i) - (large
/// after position i) over the label sequence with medium labels removed.
/// Starts at s - l and ends at 0; a small element is a down step.
LatticePath induced_path(std::span<const ClassLabel> labels);

/// Expected additional comparisons of one classification step on a random
/// permutation of n elements:
///   n/6 - 7/12 + 1/(4(n - [n even])) - E{X_down}   (Clairvoyant)
///   n/6 - 7/12 + 1/(4(n - [n even])) + E{X_up}     (Count)
/// Throws std::domain_error for n < 2.
Rational expected_additional(StrategyKind strategy, std::uint64_t n);

/// Average necessary comparisons including the pivot-ordering comparison:
/// 4/3 (n - 2) + 1. Throws std::domain_error for n < 2.
Rational necessary_average(std::uint64_t n);

/// E{P_n} = necessary_average(n) + expected_additional(strategy, n).
Rational expected_partition_cost(StrategyKind strategy, std::uint64_t n);

/// 3/2 n - 9/4 + 1/(4(n - [n even])) -/+ E{X_down / X_up}: the collected form
/// of expected_partition_cost, kept separately so the two can be compared.
Rational expected_partition_cost_collected(StrategyKind strategy, std::uint64_t n);

}  // namespace dpqs
