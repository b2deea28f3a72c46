#pragma once

// Seeded Monte Carlo runs and CSV emission for the command-line harness.
// Every trial draws its own generator from (seed, n, trial), so output does
// not depend on the thread count.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dpqs/classify.hpp"

namespace dpqs {

inline constexpr std::uint64_t kDefaultTrials = 400;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2013;
/// Largest n for which `exact` prints the rational value.
inline constexpr std::uint64_t kExactRationalLimit = 10000;

struct ExperimentConfig {
  StrategyKind strategy = StrategyKind::Clairvoyant;
  std::vector<std::uint64_t> sizes;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// 2^11 .. 2^20, or 2^11 .. 2^28 with full_grid.
std::vector<std::uint64_t> default_sizes(bool full_grid);

struct SortTrial {
  std::uint64_t n = 0;
  std::uint64_t trial = 0;
  std::uint64_t comparisons = 0;
  bool sorted = false;
};

/// Sorts `trials` uniform random permutations of {1..n}; results are in trial order.
std::vector<SortTrial> run_sort_trials(StrategyKind strategy, std::uint64_t n, std::uint64_t trials,
                                       std::uint64_t seed, unsigned threads = 0);

struct ScaledSummary {
  double mean_comparisons = 0;
  double mean_scaled = 0;
  /// Standard error of mean_scaled; 0 for a single trial.
  double se_scaled = 0;
};

/// comparisons / (n ln n). Requires n >= 2.
double scaled_cost(double comparisons, std::uint64_t n);

ScaledSummary summarize(const std::vector<SortTrial>& trials);

/// Header: n,trial,comparisons,scaled,std_error. Per-trial rows leave
/// std_error empty; each size ends with a row whose trial field is "mean".
/// Throws std::invalid_argument on trials == 0 or a size below 2.
void write_simulation_csv(const ExperimentConfig& config, std::ostream& out);

/// Header: n,strategy,exact,exact_float,scaled,asymptotic,residual.
void write_exact_csv(StrategyKind strategy, const std::vector<std::uint64_t>& sizes, std::ostream& out);

/// Header: n,trial,start,zeros,up_to_zero,down_from_zero. Ends with a "mean"
/// row (sample means) and an "exact" row (rational expectations).
void write_paths_csv(std::uint64_t n, std::uint64_t trials, std::uint64_t seed, std::ostream& out,
                     unsigned threads = 0);

/// Header: path,probability,probability_float,zeros,up_to_zero,down_from_zero.
/// One row per path of length n; n is limited by the enumeration cap.
void write_paths_exhaustive_csv(std::uint64_t n, std::ostream& out);

/// Header: n,r,probability,probability_float for 0 <= r <= n+1.
void write_distribution_csv(std::uint64_t n, std::ostream& out);

}  // namespace dpqs
