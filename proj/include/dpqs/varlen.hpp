#pragma once

// Lattice paths whose length is induced by a random pivot pair.
//
// For n >= 2 a pair 1 <= p < q <= n is drawn uniformly; the reduced length is
// n' = n - 1 - (q - p) (the number of small plus large elements), and a path
// of length n' is drawn from the fixed-length model. X_up / X_down count the
// up-to-zero and down-from-zero situations on that path.
//
// All operations throw std::domain_error for n < 2.

#include <cstdint>

#include "dpqs/lattice_path.hpp"
#include "dpqs/rational.hpp"
#include "dpqs/real.hpp"
#include "dpqs/rng.hpp"

namespace dpqs {

struct VarLenDraw {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t reduced_length = 0;
  LatticePath path;
};

/// P{N' = n'} = (n' + 1) / binom(n, 2) for 0 <= n' <= n - 2, else 0.
Rational length_probability(std::uint64_t n, std::uint64_t n_prime);

VarLenDraw sample_varlen(std::uint64_t n, Rng& rng);

/// Closed form 1/2 H^odd_{n-2} - 1/8 + (-1)^n / (8 (n - [n even])).
Rational expected_up_var(std::uint64_t n);

/// Closed form E{X_up} - 1/2 + 1 / (2 (n - [n even])).
Rational expected_down_var(std::uint64_t n);

/// sum_{n'} P{N' = n'} E{Z_up_{n'}}, evaluated term by term.
Rational expected_up_var_mixture(std::uint64_t n);

/// sum_{n'} P{N' = n'} E{Z_down_{n'}}, evaluated term by term.
Rational expected_down_var_mixture(std::uint64_t n);

/// 1/4 log n + (2 gamma + 2 log 2 - 1)/8 - 3/(8n) - (3[n even] + 1)/(12 n^2) - 3[n even]/(8 n^3).
template <class Real>
Real expected_up_var_asymptotic(std::uint64_t n);

/// 1/4 log n + (2 gamma + 2 log 2 - 5)/8 + 1/(8n) + (3[n even] - 1)/(12 n^2) + [n even]/(8 n^3).
template <class Real>
Real expected_down_var_asymptotic(std::uint64_t n);

extern template double expected_up_var_asymptotic<double>(std::uint64_t);
extern template HighReal expected_up_var_asymptotic<HighReal>(std::uint64_t);
extern template double expected_down_var_asymptotic<double>(std::uint64_t);
extern template HighReal expected_down_var_asymptotic<HighReal>(std::uint64_t);

}  // namespace dpqs
