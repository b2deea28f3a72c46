#pragma once

// Fixed-length random lattice paths.
//
// A path of length n starts at (0, s) with |s| <= n and s = n (mod 2), takes
// n steps of +1 or -1 and ends at (n, 0). The random model picks s uniformly
// among the feasible start heights and then a path uniformly among all paths
// from (0, s) to (n, 0).

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpqs/rational.hpp"
#include "dpqs/real.hpp"
#include "dpqs/rng.hpp"

namespace dpqs {

enum class Step : std::int8_t { Down = -1, Up = 1 };

class LatticePath {
 public:
  /// The single-point path of length 0.
  LatticePath() = default;

  /// Throws std::invalid_argument unless start + sum(steps) == 0.
  LatticePath(std::int64_t start, std::vector<Step> steps);

  /// Builds a path from its height sequence d_0, ..., d_n. Throws
  /// std::invalid_argument if consecutive heights do not differ by one or the
  /// last height is not 0.
  static LatticePath from_heights(std::span<const std::int64_t> heights);

  /// Parses the "start steps" text form, e.g. "2 DUDD". A length-0 path is "0".
  static LatticePath parse(std::string_view text);

  std::size_t length() const noexcept { return steps_.size(); }
  std::int64_t start() const noexcept { return start_; }
  std::span<const Step> steps() const noexcept { return steps_; }

  /// d_0, ..., d_n with d_i = start + sum of the first i steps.
  std::vector<std::int64_t> heights() const;

  /// "start steps" with 'U'/'D' step characters; just "start" for length 0.
  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::int64_t start_ = 0;
  std::vector<Step> steps_;
};

struct ZeroTally {
  std::uint64_t zeros = 0;           ///< i with d_i = 0, including both endpoints
  std::uint64_t up_to_zero = 0;      ///< i with d_i = 0 and d_{i-1} = -1
  std::uint64_t down_from_zero = 0;  ///< i with d_i = 0 and d_{i+1} = -1

  friend bool operator==(const ZeroTally&, const ZeroTally&) = default;
};

ZeroTally tally_zeros(const LatticePath& path);

/// Draws a path from the random model through the urn formulation: R uniform
/// on {0..n}, R down-steps and n - R up-steps shuffled uniformly, s = 2R - n.
LatticePath sample_path(std::uint64_t n, Rng& rng);

struct WeightedPath {
  LatticePath path;
  Rational probability;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 16;

/// Visits every feasible path of length n exactly once, together with its
/// probability 1 / ((n + 1) * binom(n, (n - s) / 2)). Start heights ascend;
/// step sequences are lexicographic within a start height (D before U).
///
/// Throws std::length_error when n exceeds `cap`.
void for_each_path(std::uint64_t n, const std::function<void(const WeightedPath&)>& visit,
                   std::uint64_t cap = kDefaultEnumerationCap);

std::vector<WeightedPath> enumerate_paths(std::uint64_t n, std::uint64_t cap = kDefaultEnumerationCap);

// Expected number of zeros, three ways.

/// H^odd_{n+1}.
Rational expected_zeros_closed(std::uint64_t n);

/// 4/(n+1) sum_{0<=k<l<ceil(n/2)} binom(n,k)/binom(n,l)
///   + [n even] (2^n / binom(n, n/2) - 1) / (n+1) + 1.
Rational expected_zeros_double_sum(std::uint64_t n);

/// The same sum folded onto odd length N = 2 floor(n/2) + 1:
/// 2/(floor(n/2)+1) sum_{0<=k<l<=floor(n/2)} binom(N,k)/binom(N,l) + 1.
Rational expected_zeros_double_sum_folded(std::uint64_t n);

/// 1/(n+1) sum_{m=0}^{floor(n/2)} sum_{l=m}^{n-m} binom(2m,m) binom(n-2m,l-m) / binom(n,l),
/// which counts passages through (n - 2m, 0) start height by start height.
Rational expected_zeros_quicksort_sum(std::uint64_t n);

/// P{Z_n = r}. Zero whenever no path of length n has r zeros (including r = 0).
Rational zero_distribution(std::uint64_t n, std::uint64_t r);

/// Probability that the random path passes through (n - m, k): 1/(m+1) for
/// |k| <= m and k = m (mod 2), otherwise 0 (also for m > n).
Rational point_probability(std::uint64_t n, std::uint64_t m, std::int64_t k);

/// H^odd_n / 2.
Rational expected_up_to_zero(std::uint64_t n);

/// (H^odd_{n+1} - 1) / 2.
Rational expected_down_from_zero(std::uint64_t n);

/// 1/2 log n + (gamma + log 2)/2 + (1 + [n even])/(2n) - (2 + 9[n even])/(12 n^2).
/// Throws std::domain_error for n == 0.
template <class Real>
Real expected_zeros_asymptotic(std::uint64_t n);

extern template double expected_zeros_asymptotic<double>(std::uint64_t);
extern template HighReal expected_zeros_asymptotic<HighReal>(std::uint64_t);

}  // namespace dpqs
