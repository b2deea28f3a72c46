#pragma once

// Harmonic numbers H_n, their odd-index and alternating variants, and binomial
// coefficients: the building blocks of every exact expectation in the library.

#include <cstdint>

#include "dpqs/rational.hpp"
#include "dpqs/real.hpp"

namespace dpqs {

/// Sum of 1/m for m = 1..n. harmonic(0) == 0.
///
/// Values are memoized incrementally in a process-wide table guarded by a
/// mutex, so dense scans over n cost one rational addition per step. Exact
/// values are practical up to roughly n = 10^4; beyond that use harmonic_real.
Rational harmonic(std::uint64_t n);

/// Sum of 1/m over odd m in 1..n.
Rational harmonic_odd(std::uint64_t n);

/// Sum of (-1)^m / m for m = 1..n.
Rational harmonic_alt(std::uint64_t n);

/// binom(n, k); zero for k < 0 or k > n.
BigNat binomial(std::uint64_t n, std::int64_t k);

/// [n even]: 1 if n is even, otherwise 0.
inline std::int64_t iverson_even(std::uint64_t n) { return n % 2 == 0 ? 1 : 0; }

/// n - [n even], the odd number in {n - 1, n}.
inline std::int64_t odd_floor(std::uint64_t n) { return static_cast<std::int64_t>(n) - iverson_even(n); }

// Floating counterparts, summed with compensation from the smallest term up.

template <class Real>
Real harmonic_real(std::uint64_t n) {
  CompensatedSum<Real> sum;
  for (std::uint64_t m = n; m >= 1; --m) {
    sum.add(Real(1) / Real(m));
  }
  return sum.value();
}

template <class Real>
Real harmonic_odd_real(std::uint64_t n) {
  CompensatedSum<Real> sum;
  for (std::uint64_t m = n; m >= 1; --m) {
    if (m % 2 == 1) sum.add(Real(1) / Real(m));
  }
  return sum.value();
}

template <class Real>
Real harmonic_alt_real(std::uint64_t n) {
  CompensatedSum<Real> sum;
  for (std::uint64_t m = n; m >= 1; --m) {
    const Real term = Real(1) / Real(m);
    sum.add(m % 2 == 0 ? term : Real(-term));
  }
  return sum.value();
}

}  // namespace dpqs
