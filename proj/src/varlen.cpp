#include "dpqs/varlen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dpqs/harmonic.hpp"

namespace dpqs {

namespace {

void require_pivot_pair(std::uint64_t n, const char* what) {
  if (n < 2) {
    throw std::domain_error(std::string(what) + ": n must be at least 2, got " + std::to_string(n));
  }
}

Rational pair_count(std::uint64_t n) { return Rational(binomial(n, 2)); }

}  // namespace

Rational length_probability(std::uint64_t n, std::uint64_t n_prime) {
  require_pivot_pair(n, "length_probability");
  if (n_prime > n - 2) return Rational(0);
  return Rational(static_cast<std::int64_t>(n_prime + 1)) / pair_count(n);
}

VarLenDraw sample_varlen(std::uint64_t n, Rng& rng) {
  require_pivot_pair(n, "sample_varlen");
  // Two distinct positions; the unordered pair is uniform over binom(n, 2).
  const auto a = uniform_int<std::uint64_t>(rng, 1, n);
  auto b = uniform_int<std::uint64_t>(rng, 1, n - 1);
  if (b >= a) ++b;
  VarLenDraw draw;
  draw.n = n;
  draw.p = std::min(a, b);
  draw.q = std::max(a, b);
  draw.reduced_length = n - 1 - (draw.q - draw.p);
  draw.path = sample_path(draw.reduced_length, rng);
  return draw;
}

Rational expected_up_var(std::uint64_t n) {
  require_pivot_pair(n, "expected_up_var");
  return harmonic_odd(n - 2) / Rational(2) - Rational(1, 8) + Rational(alternating_sign(n), 8 * odd_floor(n));
}

Rational expected_down_var(std::uint64_t n) {
  require_pivot_pair(n, "expected_down_var");
  return expected_up_var(n) - Rational(1, 2) + Rational(1, 2 * odd_floor(n));
}

Rational expected_up_var_mixture(std::uint64_t n) {
  require_pivot_pair(n, "expected_up_var_mixture");
  Rational total;
  for (std::uint64_t len = 0; len + 2 <= n; ++len) {
    total += length_probability(n, len) * expected_up_to_zero(len);
  }
  return total;
}

Rational expected_down_var_mixture(std::uint64_t n) {
  require_pivot_pair(n, "expected_down_var_mixture");
  Rational total;
  for (std::uint64_t len = 0; len + 2 <= n; ++len) {
    total += length_probability(n, len) * expected_down_from_zero(len);
  }
  return total;
}

template <class Real>
Real expected_up_var_asymptotic(std::uint64_t n) {
  require_pivot_pair(n, "expected_up_var_asymptotic");
  using std::log;
  const Real x(n);
  const Real even(iverson_even(n));
  return log(x) / 4 + (2 * euler_gamma<Real>() + 2 * log_two<Real>() - 1) / 8 - 3 / (8 * x) -
         (3 * even + 1) / (12 * x * x) - 3 * even / (8 * x * x * x);
}

template <class Real>
Real expected_down_var_asymptotic(std::uint64_t n) {
  require_pivot_pair(n, "expected_down_var_asymptotic");
  using std::log;
  const Real x(n);
  const Real even(iverson_even(n));
  return log(x) / 4 + (2 * euler_gamma<Real>() + 2 * log_two<Real>() - 5) / 8 + 1 / (8 * x) +
         (3 * even - 1) / (12 * x * x) + even / (8 * x * x * x);
}

template double expected_up_var_asymptotic<double>(std::uint64_t);
template HighReal expected_up_var_asymptotic<HighReal>(std::uint64_t);
template double expected_down_var_asymptotic<double>(std::uint64_t);
template HighReal expected_down_var_asymptotic<HighReal>(std::uint64_t);

}  // namespace dpqs
