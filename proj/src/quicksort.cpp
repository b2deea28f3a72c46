#include "dpqs/quicksort.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dpqs/harmonic.hpp"

namespace dpqs {

CostTable solve_recurrence(const RationalSequence& partition_cost, std::uint64_t n_max) {
  std::vector<Rational> values(n_max + 1);
  // sum_{k=1}^{n-2} (n-1-k) C_k = (n-1) S0 - S1 with S0 = sum C_k, S1 = sum k C_k.
  Rational s0;
  Rational s1;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t k = n - 2;
    if (k >= 1) {
      s0 += values[k];
      s1 += Rational(static_cast<std::int64_t>(k)) * values[k];
    }
    const Rational weighted = Rational(static_cast<std::int64_t>(n - 1)) * s0 - s1;
    values[n] = partition_cost(n) + Rational(3) * weighted / Rational(binomial(n, 2));
  }
  return CostTable(std::move(values));
}

Rational cost_remainder(std::uint64_t n) {
  if (n < 4) throw std::domain_error("cost_remainder: n must be at least 4");
  const auto ni = static_cast<std::int64_t>(n);
  if (n % 2 == 0) {
    return Rational(1, 320) * (Rational(1, ni - 3) + Rational(3, ni - 1));
  }
  return -Rational(1, 320) * (Rational(3, ni - 2) + Rational(1, ni));
}

Rational total_cost_closed_form(StrategyKind strategy, std::uint64_t n, const RationalSequence& remainder) {
  if (n < 4) {
    throw std::domain_error("total_cost_closed_form: valid for n >= 4, got " + std::to_string(n));
  }
  const Rational x(static_cast<std::int64_t>(n));
  const Rational h = harmonic(n);
  const Rational h_alt = harmonic_alt(n);
  const Rational sign(alternating_sign(n));
  if (strategy == StrategyKind::Clairvoyant) {
    return Rational(9, 5) * x * h + Rational(1, 5) * x * h_alt - Rational(89, 25) * x + Rational(77, 40) * h +
           Rational(3, 40) * h_alt + Rational(67, 800) - sign / Rational(10) + remainder(n);
  }
  return Rational(9, 5) * x * h - Rational(1, 5) * x * h_alt - Rational(89, 25) * x + Rational(67, 40) * h -
         Rational(3, 40) * h_alt - Rational(83, 800) + sign / Rational(10) - remainder(n);
}

Rational expected_total_cost(StrategyKind strategy, std::uint64_t n) {
  if (n < 4) {
    const CostTable table = solve_recurrence(
        [strategy](std::uint64_t m) { return expected_partition_cost(strategy, m); }, 3);
    return table.at(n);
  }
  return total_cost_closed_form(strategy, n);
}

template <class Real>
Real expected_total_cost_real(StrategyKind strategy, std::uint64_t n) {
  if (n < 4) return to_real<Real>(expected_total_cost(strategy, n));
  const Real x(n);
  const Real h = harmonic_real<Real>(n);
  const Real h_alt = harmonic_alt_real<Real>(n);
  const Real sign(alternating_sign(n));
  const Real rem = to_real<Real>(cost_remainder(n));
  if (strategy == StrategyKind::Clairvoyant) {
    return Real(9) / 5 * x * h + Real(1) / 5 * x * h_alt - Real(89) / 25 * x + Real(77) / 40 * h +
           Real(3) / 40 * h_alt + Real(67) / 800 - sign / 10 + rem;
  }
  return Real(9) / 5 * x * h - Real(1) / 5 * x * h_alt - Real(89) / 25 * x + Real(67) / 40 * h -
         Real(3) / 40 * h_alt - Real(83) / 800 + sign / 10 - rem;
}

template <class Real>
AsymptoticConstants<Real> asymptotic_constants(StrategyKind strategy) {
  const Real gamma = euler_gamma<Real>();
  const Real ln2 = log_two<Real>();
  if (strategy == StrategyKind::Clairvoyant) {
    return {
        Real(9) / 5 * gamma - ln2 / 5 - Real(89) / 25,
        Real(77) / 40,
        Real(77) / 40 * gamma - Real(3) / 40 * ln2 + Real(787) / 800,
        Real(13) / 16,
        -Real(77) / 480,
        Real(1) / 8,
        -Real(19) / 400,
    };
  }
  return {
      Real(9) / 5 * gamma + ln2 / 5 - Real(89) / 25,
      Real(67) / 40,
      Real(67) / 40 * gamma + Real(3) / 40 * ln2 + Real(637) / 800,
      Real(11) / 16,
      -Real(67) / 480,
      -Real(1) / 8,
      Real(31) / 400,
  };
}

template <class Real>
Real asymptotic_total_cost(StrategyKind strategy, std::uint64_t n) {
  if (n < 2) throw std::domain_error("asymptotic_total_cost: n must be at least 2");
  using std::log;
  const auto k = asymptotic_constants<Real>(strategy);
  const Real x(n);
  const Real lg = log(x);
  const Real even(iverson_even(n));
  return Real(9) / 5 * x * lg + k.a * x + k.b * lg + k.c + k.d / x + k.e / (x * x) +
         (k.f * even + k.g) / (x * x * x);
}

template double expected_total_cost_real<double>(StrategyKind, std::uint64_t);
template HighReal expected_total_cost_real<HighReal>(StrategyKind, std::uint64_t);
template AsymptoticConstants<double> asymptotic_constants<double>(StrategyKind);
template AsymptoticConstants<HighReal> asymptotic_constants<HighReal>(StrategyKind);
template double asymptotic_total_cost<double>(StrategyKind, std::uint64_t);
template HighReal asymptotic_total_cost<HighReal>(StrategyKind, std::uint64_t);

}  // namespace dpqs
