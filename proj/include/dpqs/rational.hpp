#pragma once

// Exact arithmetic carriers: BigNat (non-negative integer) and Rational
// (canonical fraction). Both are thin value types over GMP.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dpqs {

class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error if `value` is negative.
  explicit BigNat(mpz_class value);

  const mpz_class& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  std::string to_string() const { return value_.get_str(); }

  BigNat& operator+=(const BigNat& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  BigNat& operator*=(const BigNat& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
  friend BigNat operator*(BigNat lhs, const BigNat& rhs) { return lhs *= rhs; }
  friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_{0};
};

/// Exact fraction, always in lowest terms with a positive denominator.
///
/// Serializes as "p/q", or "p" when the denominator is 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const BigNat& value);  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when `den` is zero.
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  int sign() const noexcept { return sgn(value_); }

  std::string to_string() const;
  /// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  /// Correctly rounded (round-to-nearest-even) conversion to binary64.
  double to_double() const;
  /// Round-to-nearest conversion at 64-bit significand precision.
  long double to_long_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigNat& value);
std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace dpqs
