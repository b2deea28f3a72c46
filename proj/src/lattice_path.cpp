#include "dpqs/lattice_path.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "dpqs/harmonic.hpp"

namespace dpqs {

LatticePath::LatticePath(std::int64_t start, std::vector<Step> steps) : start_(start), steps_(std::move(steps)) {
  std::int64_t end = start_;
  for (const Step s : steps_) end += static_cast<std::int64_t>(s);
  if (end != 0) {
    throw std::invalid_argument("LatticePath: path from height " + std::to_string(start_) + " ends at " +
                                std::to_string(end) + ", not 0");
  }
}

LatticePath LatticePath::from_heights(std::span<const std::int64_t> heights) {
  if (heights.empty()) {
    throw std::invalid_argument("LatticePath: empty height sequence");
  }
  std::vector<Step> steps;
  steps.reserve(heights.size() - 1);
  for (std::size_t i = 1; i < heights.size(); ++i) {
    const std::int64_t delta = heights[i] - heights[i - 1];
    if (delta != 1 && delta != -1) {
      throw std::invalid_argument("LatticePath: heights " + std::to_string(heights[i - 1]) + " -> " +
                                  std::to_string(heights[i]) + " are not one step apart");
    }
    steps.push_back(delta == 1 ? Step::Up : Step::Down);
  }
  return LatticePath(heights.front(), std::move(steps));
}

LatticePath LatticePath::parse(std::string_view text) {
  const auto space = text.find(' ');
  const std::string_view head = text.substr(0, space);
  std::int64_t start = 0;
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), start);
  if (ec != std::errc{} || ptr != head.data() + head.size() || head.empty()) {
    throw std::invalid_argument("LatticePath: bad start height in '" + std::string(text) + "'");
  }
  std::vector<Step> steps;
  if (space != std::string_view::npos) {
    for (const char c : text.substr(space + 1)) {
      if (c == 'U') {
        steps.push_back(Step::Up);
      } else if (c == 'D') {
        steps.push_back(Step::Down);
      } else {
        throw std::invalid_argument("LatticePath: bad step character in '" + std::string(text) + "'");
      }
    }
  }
  return LatticePath(start, std::move(steps));
}

std::vector<std::int64_t> LatticePath::heights() const {
  std::vector<std::int64_t> out;
  out.reserve(steps_.size() + 1);
  out.push_back(start_);
  for (const Step s : steps_) out.push_back(out.back() + static_cast<std::int64_t>(s));
  return out;
}

std::string LatticePath::to_string() const {
  std::string out = std::to_string(start_);
  if (!steps_.empty()) {
    out.push_back(' ');
    for (const Step s : steps_) out.push_back(s == Step::Up ? 'U' : 'D');
  }
  return out;
}

ZeroTally tally_zeros(const LatticePath& path) {
  ZeroTally tally;
  std::int64_t h = path.start();
  if (h == 0) ++tally.zeros;
  for (const Step s : path.steps()) {
    const std::int64_t next = h + static_cast<std::int64_t>(s);
    if (next == 0) {
      ++tally.zeros;
      if (h == -1) ++tally.up_to_zero;
    }
    if (h == 0 && next == -1) ++tally.down_from_zero;
    h = next;
  }
  return tally;
}

LatticePath sample_path(std::uint64_t n, Rng& rng) {
  const auto red = uniform_int<std::uint64_t>(rng, 0, n);
  std::vector<Step> steps(n, Step::Up);
  std::fill_n(steps.begin(), red, Step::Down);
  fisher_yates_shuffle(std::span<Step>(steps), rng);
  return LatticePath(2 * static_cast<std::int64_t>(red) - static_cast<std::int64_t>(n), std::move(steps));
}

void for_each_path(std::uint64_t n, const std::function<void(const WeightedPath&)>& visit, std::uint64_t cap) {
  if (n > cap) {
    throw std::length_error("enumerate_paths: length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  const auto len = static_cast<std::int64_t>(n);
  for (std::int64_t start = -len; start <= len; start += 2) {
    const auto downs = static_cast<std::size_t>((len + start) / 2);
    const auto ups = static_cast<std::uint64_t>((len - start) / 2);
    const Rational probability =
        Rational(1) / (Rational(static_cast<std::int64_t>(n + 1)) * Rational(binomial(n, static_cast<std::int64_t>(ups))));

    std::vector<Step> steps(n, Step::Up);
    std::fill_n(steps.begin(), downs, Step::Down);
    do {
      visit(WeightedPath{LatticePath(start, steps), probability});
    } while (std::next_permutation(steps.begin(), steps.end()));
  }
}

std::vector<WeightedPath> enumerate_paths(std::uint64_t n, std::uint64_t cap) {
  std::vector<WeightedPath> out;
  for_each_path(n, [&](const WeightedPath& wp) { out.push_back(wp); }, cap);
  return out;
}

Rational expected_zeros_closed(std::uint64_t n) { return harmonic_odd(n + 1); }

namespace {

// sum_{l=1}^{upper} (sum_{k<l} binom(len,k)) / binom(len,l)
Rational prefix_ratio_sum(std::uint64_t len, std::uint64_t upper) {
  Rational total;
  BigNat prefix = binomial(len, 0);
  for (std::uint64_t l = 1; l <= upper; ++l) {
    const BigNat current = binomial(len, static_cast<std::int64_t>(l));
    total += Rational(prefix) / Rational(current);
    prefix += current;
  }
  return total;
}

}  // namespace

Rational expected_zeros_double_sum(std::uint64_t n) {
  const std::uint64_t half_up = (n + 1) / 2;
  const Rational n_plus_one(static_cast<std::int64_t>(n + 1));
  Rational out = half_up >= 1 ? Rational(4) / n_plus_one * prefix_ratio_sum(n, half_up - 1) : Rational(0);
  if (n % 2 == 0) {
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n);
    const Rational central(binomial(n, static_cast<std::int64_t>(n / 2)));
    out += (Rational(pow2, 1) / central - Rational(1)) / n_plus_one;
  }
  return out + Rational(1);
}

Rational expected_zeros_double_sum_folded(std::uint64_t n) {
  const std::uint64_t half = n / 2;
  const std::uint64_t len = 2 * half + 1;
  return Rational(2, static_cast<std::int64_t>(half + 1)) * prefix_ratio_sum(len, half) + Rational(1);
}

Rational expected_zeros_quicksort_sum(std::uint64_t n) {
  // Grouped by l so that each inner sum stays an integer over binom(n, l).
  Rational total;
  for (std::uint64_t l = 0; l <= n; ++l) {
    BigNat paths_through_zero(0);
    const std::uint64_t m_max = std::min(l, n - l);
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      paths_through_zero += binomial(2 * m, static_cast<std::int64_t>(m)) *
                            binomial(n - 2 * m, static_cast<std::int64_t>(l - m));
    }
    total += Rational(paths_through_zero) / Rational(binomial(n, static_cast<std::int64_t>(l)));
  }
  return total / Rational(static_cast<std::int64_t>(n + 1));
}

Rational zero_distribution(std::uint64_t n, std::uint64_t r) {
  if (n == 0) return Rational(r == 1 ? 1 : 0);
  // No path has zero zeros (the endpoint is one); the closed form would divide by r.
  if (r == 0) return Rational(0);
  if (n + 2 < 2 * r) return Rational(0);

  const auto ri = static_cast<std::int64_t>(r);
  const std::uint64_t half_up = (n + 1) / 2;
  const bool even = n % 2 == 0;
  const Rational n_plus_one(static_cast<std::int64_t>(n + 1));
  const Rational binom_n_r(binomial(n, ri));
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, r);
  const Rational two_r(pow2, 1);

  Rational bracket = Rational(2 * static_cast<std::int64_t>(half_up), ri * (ri + 1)) + Rational(ri - 1, ri + 1);
  if (even) bracket += Rational(1, ri);
  Rational out = two_r / n_plus_one * Rational(binomial(half_up, ri)) / binom_n_r * bracket;
  if (even) {
    out += two_r / Rational(2) * Rational(ri - 1) / (n_plus_one * Rational(ri)) *
           Rational(binomial(n / 2, ri - 1)) / binom_n_r;
  }
  return out;
}

Rational point_probability(std::uint64_t n, std::uint64_t m, std::int64_t k) {
  const auto mi = static_cast<std::int64_t>(m);
  if (m > n || k > mi || k < -mi || (mi - k) % 2 != 0) return Rational(0);
  return Rational(1, mi + 1);
}

Rational expected_up_to_zero(std::uint64_t n) { return harmonic_odd(n) / Rational(2); }

Rational expected_down_from_zero(std::uint64_t n) { return (harmonic_odd(n + 1) - Rational(1)) / Rational(2); }

template <class Real>
Real expected_zeros_asymptotic(std::uint64_t n) {
  if (n == 0) throw std::domain_error("expected_zeros_asymptotic: n must be positive");
  using std::log;
  const Real x(n);
  const Real even(iverson_even(n));
  return log(x) / 2 + (euler_gamma<Real>() + log_two<Real>()) / 2 + (1 + even) / (2 * x) -
         (2 + 9 * even) / (12 * x * x);
}

template double expected_zeros_asymptotic<double>(std::uint64_t);
template HighReal expected_zeros_asymptotic<HighReal>(std::uint64_t);

}  // namespace dpqs
