#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "dpqs/harmonic.hpp"
#include "dpqs/lattice_path.hpp"
#include "dpqs/rng.hpp"
#include "support.hpp"

using namespace dpqs;
using dpqs::test::frac;

namespace {

struct Moments {
  double mean = 0;
  double se = 0;
};

template <class Draw>
Moments sample_moments(std::uint64_t samples, const Draw& draw) {
  double sum = 0;
  double sum_sq = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double x = draw();
    sum += x;
    sum_sq += x * x;
  }
  const auto k = static_cast<double>(samples);
  const double mean = sum / k;
  const double var = (sum_sq - k * mean * mean) / (k - 1);
  return {mean, std::sqrt(var / k)};
}

}  // namespace

TEST_CASE("lattice path construction") {
  const LatticePath p = LatticePath::parse("2 DUDD");
  CHECK(p.start() == 2);
  CHECK(p.length() == 4);
  CHECK(p.heights() == std::vector<std::int64_t>{2, 1, 2, 1, 0});
  CHECK(p.to_string() == "2 DUDD");
  CHECK(LatticePath::parse("0").length() == 0);
  CHECK(LatticePath::parse(p.to_string()) == p);
  CHECK_THROWS_AS(LatticePath(1, {Step::Up}), std::invalid_argument);
  CHECK_THROWS(LatticePath::parse("1 U"));
  const std::vector<std::int64_t> bad{0, 2, 0};
  CHECK_THROWS(LatticePath::from_heights(bad));
}

TEST_CASE("zero tallies") {
  CHECK(tally_zeros(LatticePath::parse("0")) == ZeroTally{1, 0, 0});
  const std::vector<std::int64_t> hill{0, 1, 0};
  CHECK(tally_zeros(LatticePath::from_heights(hill)) == ZeroTally{2, 0, 0});
  const std::vector<std::int64_t> valley{0, -1, 0};
  CHECK(tally_zeros(LatticePath::from_heights(valley)) == ZeroTally{2, 1, 1});

  const std::vector<std::int64_t> figure{2, 3, 2, 1, 0, -1, 0, -1, -2, -1, 0, 1, 0, 1, 2, 1, 0};
  const LatticePath path = LatticePath::from_heights(figure);
  CHECK(path.start() == 2);
  CHECK(path.length() == 16);
  CHECK(tally_zeros(path) == ZeroTally{5, 2, 2});
}

TEST_CASE("path enumeration: small lengths") {
  const auto zero = enumerate_paths(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].probability == frac(1));

  const auto one = enumerate_paths(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].probability == frac(1, 2));
  CHECK(one[1].probability == frac(1, 2));

  const auto two = enumerate_paths(2);
  REQUIRE(two.size() == 4);
  std::map<std::int64_t, Rational> by_start;
  for (const auto& wp : two) by_start[wp.path.start()] += wp.probability;
  CHECK(by_start[-2] == frac(1, 3));
  CHECK(by_start[0] == frac(1, 3));
  CHECK(by_start[2] == frac(1, 3));
  for (const auto& wp : two) {
    CHECK(wp.probability == (wp.path.start() == 0 ? frac(1, 6) : frac(1, 3)));
  }

  CHECK_THROWS_AS(enumerate_paths(17), std::length_error);
}

TEST_CASE("expected zeros: the equivalent expressions") {
  CHECK(expected_zeros_closed(0) == frac(1));
  CHECK(expected_zeros_closed(2) == frac(4, 3));
  CHECK(expected_zeros_closed(5) == frac(23, 15));
  CHECK(expected_zeros_double_sum(0) == frac(1));
  CHECK(expected_zeros_double_sum(2) == frac(4, 3));
  CHECK(expected_zeros_double_sum(7) == harmonic_odd(8));
  CHECK(expected_zeros_quicksort_sum(0) == frac(1));
  CHECK(expected_zeros_quicksort_sum(4) == harmonic_odd(5));
  CHECK(expected_zeros_quicksort_sum(9) == harmonic_odd(10));

  for (std::uint64_t n = 0; n <= 200; ++n) {
    const Rational h = harmonic_odd(n + 1);
    REQUIRE(expected_zeros_closed(n) == h);
    REQUIRE(expected_zeros_double_sum(n) == h);
    REQUIRE(expected_zeros_double_sum_folded(n) == h);
    REQUIRE(expected_zeros_quicksort_sum(n) == h);
  }
}

TEST_CASE("frozen brute-force values for short paths") {
  // From tests/oracles/freeze_values.py, which enumerates raw step tuples.
  struct Row {
    std::uint64_t n;
    Rational zeros, up, down;
    std::map<std::uint64_t, Rational> dist;
  };
  const std::vector<Row> rows{
      {0, frac(1), frac(0), frac(0), {{1, frac(1)}}},
      {1, frac(1), frac(1, 2), frac(0), {{1, frac(1)}}},
      {2, frac(4, 3), frac(1, 2), frac(1, 6), {{1, frac(2, 3)}, {2, frac(1, 3)}}},
      {3, frac(4, 3), frac(2, 3), frac(1, 6), {{1, frac(2, 3)}, {2, frac(1, 3)}}},
      {4, frac(23, 15), frac(2, 3), frac(4, 15), {{1, frac(3, 5)}, {2, frac(4, 15)}, {3, frac(2, 15)}}},
      {5, frac(23, 15), frac(23, 30), frac(4, 15), {{1, frac(3, 5)}, {2, frac(4, 15)}, {3, frac(2, 15)}}},
      {6, frac(176, 105), frac(23, 30), frac(71, 210),
       {{1, frac(4, 7)}, {2, frac(5, 21)}, {3, frac(2, 15)}, {4, frac(2, 35)}}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.n);
    CHECK(expected_zeros_closed(row.n) == row.zeros);
    CHECK(expected_up_to_zero(row.n) == row.up);
    CHECK(expected_down_from_zero(row.n) == row.down);
    for (std::uint64_t r = 0; r <= row.n + 2; ++r) {
      const auto it = row.dist.find(r);
      CHECK(zero_distribution(row.n, r) == (it == row.dist.end() ? frac(0) : it->second));
    }
  }
}

TEST_CASE("zero distribution") {
  CHECK(zero_distribution(0, 1) == frac(1));
  CHECK(zero_distribution(0, 0) == frac(0));
  CHECK(zero_distribution(0, 2) == frac(0));
  CHECK(zero_distribution(2, 1) == frac(2, 3));
  CHECK(zero_distribution(2, 2) == frac(1, 3));
  for (std::uint64_t n = 1; n <= 300; n += 37) CHECK(zero_distribution(n, 0) == frac(0));
}

TEST_CASE("enumeration matches every closed form up to length 14") {
  for (std::uint64_t n = 0; n <= 14; ++n) {
    CAPTURE(n);
    Rational zeros;
    Rational up;
    Rational down;
    Rational mass;
    std::map<std::uint64_t, Rational> dist;
    for_each_path(n, [&](const WeightedPath& wp) {
      const ZeroTally t = tally_zeros(wp.path);
      CHECK(t.zeros >= 1);
      CHECK(t.up_to_zero <= t.zeros);
      CHECK(t.down_from_zero <= t.zeros);
      zeros += wp.probability * frac(static_cast<std::int64_t>(t.zeros));
      up += wp.probability * frac(static_cast<std::int64_t>(t.up_to_zero));
      down += wp.probability * frac(static_cast<std::int64_t>(t.down_from_zero));
      mass += wp.probability;
      dist[t.zeros] += wp.probability;
    });
    CHECK(mass == frac(1));
    CHECK(zeros == harmonic_odd(n + 1));
    CHECK(up == harmonic_odd(n) / frac(2));
    CHECK(down == (harmonic_odd(n + 1) - frac(1)) / frac(2));
    Rational total;
    for (std::uint64_t r = 0; r <= n + 2; ++r) {
      const auto it = dist.find(r);
      CHECK(zero_distribution(n, r) == (it == dist.end() ? frac(0) : it->second));
      total += zero_distribution(n, r);
    }
    CHECK(total == frac(1));
  }
}

TEST_CASE("point probabilities") {
  CHECK(point_probability(10, 4, 0) == frac(1, 5));
  CHECK(point_probability(10, 4, 3) == frac(0));
  CHECK(point_probability(6, 6, -6) == frac(1, 7));
  CHECK(point_probability(6, 2, 4) == frac(0));
  CHECK(point_probability(6, 7, 0) == frac(0));

  for (std::uint64_t n = 0; n <= 12; ++n) {
    std::map<std::pair<std::uint64_t, std::int64_t>, Rational> through;
    for_each_path(n, [&](const WeightedPath& wp) {
      const auto h = wp.path.heights();
      for (std::uint64_t x = 0; x <= n; ++x) through[{x, h[x]}] += wp.probability;
    });
    for (std::uint64_t m = 0; m <= n; ++m) {
      const auto mi = static_cast<std::int64_t>(m);
      for (std::int64_t k = -mi; k <= mi; k += 2) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CHECK(through[{n - m, k}] == frac(1, mi + 1));
        CHECK(point_probability(n, m, k) == frac(1, mi + 1));
      }
    }
  }
}

TEST_CASE("up-to-zero and down-from-zero expectations") {
  CHECK(expected_up_to_zero(0) == frac(0));
  CHECK(expected_down_from_zero(2) == frac(1, 6));
  CHECK(expected_up_to_zero(3) == frac(2, 3));
}

TEST_CASE("sampled paths follow the model") {
  Rng rng(derive_seed(7, {1}));
  const LatticePath empty = sample_path(0, rng);
  CHECK(empty.length() == 0);
  CHECK(empty.start() == 0);

  // Start heights at n = 2 are uniform over {-2, 0, 2}.
  std::uint64_t at_zero = 0;
  const std::uint64_t draws = 60000;
  for (std::uint64_t i = 0; i < draws; ++i) at_zero += sample_path(2, rng).start() == 0;
  const double p = static_cast<double>(at_zero) / static_cast<double>(draws);
  CHECK(std::abs(p - 1.0 / 3.0) < 4 * std::sqrt(2.0 / 9.0 / static_cast<double>(draws)));

  for (const std::uint64_t n : {2u, 10u, 100u, 1000u}) {
    CAPTURE(n);
    const Moments m = sample_moments(100000, [&] {
      const LatticePath path = sample_path(n, rng);
      CHECK(path.heights().back() == 0);
      return static_cast<double>(tally_zeros(path).zeros);
    });
    CHECK(std::abs(m.mean - harmonic_odd(n + 1).to_double()) < 4 * m.se);
  }
}

TEST_CASE("zero counts approach 1/(r(r+1)) for long paths") {
  const std::uint64_t n = 10000;
  const std::uint64_t draws = 20000;
  Rng rng(derive_seed(11, {n}));
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[tally_zeros(sample_path(n, rng)).zeros];
  for (const std::uint64_t r : {1u, 2u, 3u}) {
    CAPTURE(r);
    const double limit = 1.0 / static_cast<double>(r * (r + 1));
    const double exact = zero_distribution(n, r).to_double();
    // The exact law sits within O(n^-1/2) of the limit; sampling is checked against both.
    CHECK(std::abs(exact - limit) < 0.01);
    const double emp = static_cast<double>(counts[r]) / static_cast<double>(draws);
    const double se = std::sqrt(exact * (1 - exact) / static_cast<double>(draws));
    CHECK(std::abs(emp - exact) < 4 * se);
    CHECK(std::abs(emp - limit) < 4 * se + std::abs(exact - limit));
  }
}

TEST_CASE("asymptotic expansion of the expected zero count") {
  CHECK_THROWS_AS(expected_zeros_asymptotic<double>(0), std::domain_error);
  // Parity terms differ between neighbours.
  const double even = expected_zeros_asymptotic<double>(100) - std::log(100.0) / 2;
  const double odd = expected_zeros_asymptotic<double>(101) - std::log(101.0) / 2;
  CHECK(even != doctest::Approx(odd).epsilon(1e-6));

  // The even branch carries a larger n^-3 constant, so the residual shrinks within each parity.
  const auto residual = [](std::uint64_t n) {
    return std::abs(expected_zeros_asymptotic<double>(n) - harmonic_odd(n + 1).to_double());
  };
  CHECK(residual(11) < residual(5));
  CHECK(residual(10) < residual(4));
  CHECK(std::isfinite(expected_zeros_asymptotic<double>(10)));

  // The residual is O(n^-3): n^3 times it stays bounded across four decades.
  for (const std::uint64_t n : {1000u, 10000u, 100000u, 1000000u}) {
    const HighReal exact = harmonic_odd_real<HighReal>(n + 1);
    const HighReal residual = abs(exact - expected_zeros_asymptotic<HighReal>(n));
    const HighReal x(n);
    CAPTURE(n);
    CHECK(residual * x * x * x < HighReal(1));
  }
}
