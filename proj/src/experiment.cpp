#include "dpqs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "dpqs/lattice_path.hpp"
#include "dpqs/quicksort.hpp"
#include "dpqs/real.hpp"
#include "dpqs/rng.hpp"

namespace dpqs {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_scientific(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

unsigned resolve_threads(unsigned requested, std::uint64_t jobs) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(jobs, 1)));
}

/// Runs job(i) for 0 <= i < count across `threads` workers. Each job writes
/// only to its own slot, so the result is independent of scheduling.
template <class Job>
void parallel_for(std::uint64_t count, unsigned threads, const Job& job) {
  const unsigned workers = resolve_threads(threads, count);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < count; i = next++) job(i);
    });
  }
}

}  // namespace

std::vector<std::uint64_t> default_sizes(bool full_grid) {
  std::vector<std::uint64_t> sizes;
  const int top = full_grid ? 28 : 20;
  for (int e = 11; e <= top; ++e) sizes.push_back(std::uint64_t{1} << e);
  return sizes;
}

std::vector<SortTrial> run_sort_trials(StrategyKind strategy, std::uint64_t n, std::uint64_t trials,
                                       std::uint64_t seed, unsigned threads) {
  std::vector<SortTrial> results(trials);
  parallel_for(trials, threads, [&](std::uint64_t t) {
    Rng rng(derive_seed(seed, {n, t}));
    std::vector<std::uint64_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::uint64_t{1});
    fisher_yates_shuffle(std::span<std::uint64_t>(perm), rng);
    const auto report = dual_pivot_sort(perm, strategy);
    results[t] = {n, t, report.comparisons, std::is_sorted(report.output.begin(), report.output.end())};
  });
  return results;
}

double scaled_cost(double comparisons, std::uint64_t n) {
  if (n < 2) throw std::domain_error("scaled_cost: n must be at least 2");
  const auto x = static_cast<double>(n);
  return comparisons / (x * std::log(x));
}

ScaledSummary summarize(const std::vector<SortTrial>& trials) {
  ScaledSummary s;
  if (trials.empty()) return s;
  const auto count = static_cast<double>(trials.size());
  double sum_c = 0;
  double sum_s = 0;
  for (const SortTrial& t : trials) {
    sum_c += static_cast<double>(t.comparisons);
    sum_s += scaled_cost(static_cast<double>(t.comparisons), t.n);
  }
  s.mean_comparisons = sum_c / count;
  s.mean_scaled = sum_s / count;
  if (trials.size() > 1) {
    double ss = 0;
    for (const SortTrial& t : trials) {
      const double d = scaled_cost(static_cast<double>(t.comparisons), t.n) - s.mean_scaled;
      ss += d * d;
    }
    s.se_scaled = std::sqrt(ss / (count - 1) / count);
  }
  return s;
}

void write_simulation_csv(const ExperimentConfig& config, std::ostream& out) {
  if (config.trials == 0) throw std::invalid_argument("simulate: trials must be at least 1");
  for (const std::uint64_t n : config.sizes) {
    if (n < 2) throw std::invalid_argument("simulate: sizes must be at least 2, got " + std::to_string(n));
  }
  out << "n,trial,comparisons,scaled,std_error\n";
  for (const std::uint64_t n : config.sizes) {
    const auto trials = run_sort_trials(config.strategy, n, config.trials, config.seed, config.threads);
    for (const SortTrial& t : trials) {
      if (!t.sorted) throw std::logic_error("simulate: output not sorted at n=" + std::to_string(n));
      out << n << ',' << t.trial << ',' << t.comparisons << ','
          << format_double(scaled_cost(static_cast<double>(t.comparisons), n)) << ",\n";
    }
    const ScaledSummary s = summarize(trials);
    out << n << ",mean," << format_double(s.mean_comparisons) << ',' << format_double(s.mean_scaled) << ','
        << format_double(s.se_scaled) << '\n';
  }
}

void write_exact_csv(StrategyKind strategy, const std::vector<std::uint64_t>& sizes, std::ostream& out) {
  out << "n,strategy,exact,exact_float,scaled,asymptotic,residual\n";
  for (const std::uint64_t n : sizes) {
    std::string rational;
    HighReal exact;
    if (n <= kExactRationalLimit) {
      const Rational value = expected_total_cost(strategy, n);
      rational = value.to_string();
      exact = to_real<HighReal>(value);
    } else {
      exact = expected_total_cost_real<HighReal>(strategy, n);
    }
    const double exact_d = static_cast<double>(exact);
    out << n << ',' << to_string(strategy) << ',' << rational << ',' << format_double(exact_d) << ',';
    if (n >= 2) {
      const HighReal asym = asymptotic_total_cost<HighReal>(strategy, n);
      out << format_double(scaled_cost(exact_d, n)) << ',' << format_double(static_cast<double>(asym)) << ','
          << format_scientific(static_cast<double>(exact - asym));
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_paths_csv(std::uint64_t n, std::uint64_t trials, std::uint64_t seed, std::ostream& out,
                     unsigned threads) {
  struct Row {
    std::int64_t start = 0;
    ZeroTally tally;
  };
  std::vector<Row> rows(trials);
  parallel_for(trials, threads, [&](std::uint64_t t) {
    Rng rng(derive_seed(seed, {n, t}));
    const LatticePath path = sample_path(n, rng);
    rows[t] = {path.start(), tally_zeros(path)};
  });

  out << "n,trial,start,zeros,up_to_zero,down_from_zero\n";
  std::uint64_t zeros = 0;
  std::uint64_t up = 0;
  std::uint64_t down = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Row& r = rows[t];
    zeros += r.tally.zeros;
    up += r.tally.up_to_zero;
    down += r.tally.down_from_zero;
    out << n << ',' << t << ',' << r.start << ',' << r.tally.zeros << ',' << r.tally.up_to_zero << ','
        << r.tally.down_from_zero << '\n';
  }
  if (trials > 0) {
    const auto count = static_cast<double>(trials);
    out << n << ",mean,," << format_double(static_cast<double>(zeros) / count) << ','
        << format_double(static_cast<double>(up) / count) << ','
        << format_double(static_cast<double>(down) / count) << '\n';
  }
  out << n << ",exact,," << expected_zeros_closed(n) << ',' << expected_up_to_zero(n) << ','
      << expected_down_from_zero(n) << '\n';
}

void write_paths_exhaustive_csv(std::uint64_t n, std::ostream& out) {
  if (n > kDefaultEnumerationCap) {
    throw std::length_error("paths: exhaustive mode supports n <= " + std::to_string(kDefaultEnumerationCap));
  }
  out << "path,probability,probability_float,zeros,up_to_zero,down_from_zero\n";
  for_each_path(n, [&](const WeightedPath& wp) {
    const ZeroTally t = tally_zeros(wp.path);
    out << wp.path.to_string() << ',' << wp.probability << ',' << format_double(wp.probability.to_double()) << ','
        << t.zeros << ',' << t.up_to_zero << ',' << t.down_from_zero << '\n';
  });
}

void write_distribution_csv(std::uint64_t n, std::ostream& out) {
  out << "n,r,probability,probability_float\n";
  for (std::uint64_t r = 0; r <= n + 1; ++r) {
    const Rational p = zero_distribution(n, r);
    out << n << ',' << r << ',' << p << ',' << format_double(p.to_double()) << '\n';
  }
}

}  // namespace dpqs
