#include "dpqs/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include <mpfr.h>

namespace dpqs {

BigNat::BigNat(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {}

BigNat::BigNat(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) {
    throw std::domain_error("BigNat: negative value " + value_.get_str());
  }
}

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigNat& value) : value_(value.value()) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {}

std::string Rational::to_string() const {
  // mpq_get_str already omits "/1" for integers.
  return value_.get_str();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return Rational(std::move(q));
}

namespace {

class MpfrScratch {
 public:
  explicit MpfrScratch(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~MpfrScratch() { mpfr_clear(value_); }
  MpfrScratch(const MpfrScratch&) = delete;
  MpfrScratch& operator=(const MpfrScratch&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace

double Rational::to_double() const {
  MpfrScratch x(53);
  mpfr_set_q(x.get(), value_.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(x.get(), MPFR_RNDN);
}

long double Rational::to_long_double() const {
  MpfrScratch x(64);
  mpfr_set_q(x.get(), value_.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_ld(x.get(), MPFR_RNDN);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const BigNat& value) { return os << value.to_string(); }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace dpqs
