#pragma once

// Floating-point helpers for the asymptotic side of the library. Everything is
// templated on the real type so the same expansion can be evaluated in binary64
// and in multi-precision (HighReal) when residuals far below 1 ulp of the
// leading term are needed.

#include <cmath>
#include <cstdint>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "dpqs/rational.hpp"

namespace dpqs {

/// 80 significant decimal digits (about 266 bits).
using HighReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>,
                                               boost::multiprecision::et_off>;

template <class Real>
Real euler_gamma() {
  return boost::math::constants::euler<Real>();
}

template <class Real>
Real log_two() {
  return boost::math::constants::ln_two<Real>();
}

/// Neumaier's variant of Kahan summation.
template <class Real>
class CompensatedSum {
 public:
  void add(const Real& term) {
    const Real t = sum_ + term;
    using std::abs;
    if (abs(sum_) >= abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  Real value() const { return sum_ + compensation_; }

 private:
  Real sum_{0};
  Real compensation_{0};
};

/// Round-to-nearest conversion of an exact value into `Real`.
template <class Real>
Real to_real(const Rational& value) {
  if constexpr (std::is_same_v<Real, HighReal>) {
    HighReal out;
    mpfr_set_q(out.backend().data(), value.value().get_mpq_t(), MPFR_RNDN);
    return out;
  } else if constexpr (std::is_same_v<Real, long double>) {
    return value.to_long_double();
  } else {
    return static_cast<Real>(value.to_double());
  }
}

inline bool is_even(std::uint64_t n) { return n % 2 == 0; }

/// (-1)^n as a signed integer.
inline int alternating_sign(std::uint64_t n) { return is_even(n) ? 1 : -1; }

}  // namespace dpqs
