#include "dpqs/classify.hpp"

#include <string>

#include "dpqs/harmonic.hpp"
#include "dpqs/varlen.hpp"

namespace dpqs {

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Clairvoyant:
      return "clairvoyant";
    case StrategyKind::Count:
      return "count";
  }
  return "unknown";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) {
  if (name == "clairvoyant") return StrategyKind::Clairvoyant;
  if (name == "count") return StrategyKind::Count;
  return std::nullopt;
}

LatticePath induced_path(std::span<const ClassLabel> labels) {
  std::int64_t small = 0;
  std::int64_t large = 0;
  std::vector<Step> steps;
  steps.reserve(labels.size());
  for (const ClassLabel label : labels) {
    if (label == ClassLabel::Small) {
      ++small;
      steps.push_back(Step::Down);
    } else if (label == ClassLabel::Large) {
      ++large;
      steps.push_back(Step::Up);
    }
  }
  return LatticePath(small - large, std::move(steps));
}

namespace {

void require_pivot_pair(std::uint64_t n, const char* what) {
  if (n < 2) {
    throw std::domain_error(std::string(what) + ": n must be at least 2, got " + std::to_string(n));
  }
}

// (1/binom(n,2)) sum_{p<q} min(p - 1, n - q) in closed form.
Rational mean_min_small_large(std::uint64_t n) {
  const auto ni = static_cast<std::int64_t>(n);
  return Rational(ni, 6) - Rational(7, 12) + Rational(1, 4 * odd_floor(n));
}

}  // namespace

Rational expected_additional(StrategyKind strategy, std::uint64_t n) {
  require_pivot_pair(n, "expected_additional");
  return strategy == StrategyKind::Clairvoyant ? mean_min_small_large(n) - expected_down_var(n)
                                               : mean_min_small_large(n) + expected_up_var(n);
}

Rational necessary_average(std::uint64_t n) {
  require_pivot_pair(n, "necessary_average");
  return Rational(4, 3) * Rational(static_cast<std::int64_t>(n) - 2) + Rational(1);
}

Rational expected_partition_cost(StrategyKind strategy, std::uint64_t n) {
  require_pivot_pair(n, "expected_partition_cost");
  return necessary_average(n) + expected_additional(strategy, n);
}

Rational expected_partition_cost_collected(StrategyKind strategy, std::uint64_t n) {
  require_pivot_pair(n, "expected_partition_cost_collected");
  const Rational base =
      Rational(3 * static_cast<std::int64_t>(n), 2) - Rational(9, 4) + Rational(1, 4 * odd_floor(n));
  return strategy == StrategyKind::Clairvoyant ? base - expected_down_var(n) : base + expected_up_var(n);
}

}  // namespace dpqs
