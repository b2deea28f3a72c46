#include "dpqs/harmonic.hpp"

#include <mutex>
#include <vector>

namespace dpqs {

namespace {

// The three sums are accumulated independently; none is derived from another,
// so the relations between them remain meaningful checks.
class HarmonicTable {
 public:
  Rational plain(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    extend(n);
    return plain_[n];
  }

  Rational odd(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    extend(n);
    return odd_[n];
  }

  Rational alt(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    extend(n);
    return alt_[n];
  }

 private:
  void extend(std::uint64_t n) {
    while (plain_.size() <= n) {
      const auto m = static_cast<std::int64_t>(plain_.size());
      const Rational term(1, m);
      plain_.push_back(plain_.back() + term);
      odd_.push_back(m % 2 == 1 ? odd_.back() + term : odd_.back());
      alt_.push_back(m % 2 == 0 ? alt_.back() + term : alt_.back() - term);
    }
  }

  std::mutex mutex_;
  std::vector<Rational> plain_{Rational(0)};
  std::vector<Rational> odd_{Rational(0)};
  std::vector<Rational> alt_{Rational(0)};
};

HarmonicTable& table() {
  static HarmonicTable instance;
  return instance;
}

}  // namespace

Rational harmonic(std::uint64_t n) { return table().plain(n); }

Rational harmonic_odd(std::uint64_t n) { return table().odd(n); }

Rational harmonic_alt(std::uint64_t n) { return table().alt(n); }

BigNat binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) {
    return BigNat(0);
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return BigNat(std::move(out));
}

}  // namespace dpqs
