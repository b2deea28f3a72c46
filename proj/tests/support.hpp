#pragma once

// Shared test fixtures: the figure example, label realization, and brute-force
// helpers that use only the public primitives.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dpqs/classify.hpp"
#include "dpqs/quicksort.hpp"
#include "dpqs/rational.hpp"

namespace dpqs::test {

inline constexpr int kSmallKey = 5;
inline constexpr int kMediumKey = 15;
inline constexpr int kLargeKey = 25;
inline constexpr int kPivotP = 10;
inline constexpr int kPivotQ = 20;

/// Concrete keys for a label sequence with pivots kPivotP < kPivotQ.
inline std::vector<int> realize(const std::vector<ClassLabel>& labels) {
  std::vector<int> keys;
  keys.reserve(labels.size());
  for (const ClassLabel l : labels) {
    keys.push_back(l == ClassLabel::Small ? kSmallKey : l == ClassLabel::Large ? kLargeKey : kMediumKey);
  }
  return keys;
}

/// "lsssslsslllsllss": the example run with s = 9 small and l = 7 large.
inline std::vector<ClassLabel> figure_sequence() {
  const std::string text = "lsssslsslllsllss";
  std::vector<ClassLabel> labels;
  for (const char c : text) labels.push_back(c == 's' ? ClassLabel::Small : ClassLabel::Large);
  return labels;
}

inline ClassificationRun run_labels(StrategyKind strategy, const std::vector<ClassLabel>& labels) {
  const std::vector<int> keys = realize(labels);
  return classify(strategy, std::span<const int>(keys), kPivotP, kPivotQ);
}

/// Mean comparisons of dual_pivot_sort over all permutations of {1..n},
/// accumulated independently of the verification module.
inline Rational brute_force_mean_cost(StrategyKind strategy, std::uint64_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::int64_t total = 0;
  std::int64_t count = 0;
  do {
    total += static_cast<std::int64_t>(dual_pivot_sort(perm, strategy).comparisons);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(total, count);
}

inline std::uint64_t min_small_large(const ClassificationRun& run) {
  return std::min(run.small_count, run.large_count);
}

inline Rational frac(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

}  // namespace dpqs::test
