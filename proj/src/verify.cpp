#include "dpqs/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dpqs/harmonic.hpp"
#include "dpqs/lattice_path.hpp"
#include "dpqs/quicksort.hpp"
#include "dpqs/varlen.hpp"

namespace dpqs {

namespace {

CheckResult fail(std::string name, const std::string& detail) { return {std::move(name), false, detail}; }

std::string mismatch(const std::string& what, std::uint64_t n, const Rational& lhs, const Rational& rhs) {
  std::ostringstream os;
  os << what << " at n=" << n << ": " << lhs << " != " << rhs;
  return os.str();
}

}  // namespace

CheckResult check_zero_identity(std::uint64_t max_n) {
  const std::string name = "zero-count identity (n <= " + std::to_string(max_n) + ")";
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    const Rational single = expected_zeros_closed(n);
    if (const Rational v = expected_zeros_double_sum(n); v != single) {
      return fail(name, mismatch("double sum", n, v, single));
    }
    if (const Rational v = expected_zeros_double_sum_folded(n); v != single) {
      return fail(name, mismatch("folded double sum", n, v, single));
    }
    if (const Rational v = expected_zeros_quicksort_sum(n); v != single) {
      return fail(name, mismatch("quicksort double sum", n, v, single));
    }
  }
  return {name, true, ""};
}

CheckResult check_path_enumeration(std::uint64_t max_n) {
  const std::string name = "path enumeration vs closed forms (n <= " + std::to_string(max_n) + ")";
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    Rational zeros;
    Rational up;
    Rational down;
    Rational mass;
    std::map<std::uint64_t, Rational> distribution;
    for_each_path(n, [&](const WeightedPath& wp) {
      const ZeroTally t = tally_zeros(wp.path);
      zeros += wp.probability * Rational(static_cast<std::int64_t>(t.zeros));
      up += wp.probability * Rational(static_cast<std::int64_t>(t.up_to_zero));
      down += wp.probability * Rational(static_cast<std::int64_t>(t.down_from_zero));
      mass += wp.probability;
      distribution[t.zeros] += wp.probability;
    }, max_n);

    if (mass != Rational(1)) return fail(name, mismatch("total probability", n, mass, Rational(1)));
    if (zeros != expected_zeros_closed(n)) return fail(name, mismatch("E zeros", n, zeros, expected_zeros_closed(n)));
    if (up != expected_up_to_zero(n)) return fail(name, mismatch("E up-to-zero", n, up, expected_up_to_zero(n)));
    if (down != expected_down_from_zero(n)) {
      return fail(name, mismatch("E down-from-zero", n, down, expected_down_from_zero(n)));
    }

    Rational closed_mass;
    for (std::uint64_t r = 0; r <= n + 2; ++r) {
      const Rational closed = zero_distribution(n, r);
      const auto it = distribution.find(r);
      const Rational enumerated = it == distribution.end() ? Rational(0) : it->second;
      if (closed != enumerated) {
        return fail(name, mismatch("P{Z=" + std::to_string(r) + "}", n, closed, enumerated));
      }
      closed_mass += closed;
    }
    if (closed_mass != Rational(1)) return fail(name, mismatch("sum of P{Z=r}", n, closed_mass, Rational(1)));
  }
  return {name, true, ""};
}

CheckResult check_point_uniformity(std::uint64_t max_n) {
  const std::string name = "point uniformity (n <= " + std::to_string(max_n) + ")";
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    // (x, height) -> probability that the path passes through it
    std::map<std::pair<std::uint64_t, std::int64_t>, Rational> through;
    for_each_path(n, [&](const WeightedPath& wp) {
      const auto h = wp.path.heights();
      for (std::uint64_t x = 0; x < h.size(); ++x) through[{x, h[x]}] += wp.probability;
    }, max_n);

    const auto len = static_cast<std::int64_t>(n);
    for (std::uint64_t m = 0; m <= n; ++m) {
      for (std::int64_t k = -len - 1; k <= len + 1; ++k) {
        const auto it = through.find({n - m, k});
        const Rational enumerated = it == through.end() ? Rational(0) : it->second;
        const Rational closed = point_probability(n, m, k);
        if (closed != enumerated) {
          return fail(name, mismatch("(m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")", n, closed,
                                     enumerated));
        }
      }
    }
  }
  return {name, true, ""};
}

CheckResult check_varlen_mixture(std::uint64_t max_n) {
  const std::string name = "variable-length mixtures (2 <= n <= " + std::to_string(max_n) + ")";
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    if (expected_up_var(n) != expected_up_var_mixture(n)) {
      return fail(name, mismatch("E X_up", n, expected_up_var(n), expected_up_var_mixture(n)));
    }
    if (expected_down_var(n) != expected_down_var_mixture(n)) {
      return fail(name, mismatch("E X_down", n, expected_down_var(n), expected_down_var_mixture(n)));
    }
    Rational mass;
    for (std::uint64_t len = 0; len + 2 <= n; ++len) mass += length_probability(n, len);
    if (mass != Rational(1)) return fail(name, mismatch("sum P{N'=n'}", n, mass, Rational(1)));
  }
  return {name, true, ""};
}

CheckResult check_recurrence_closed_form(std::uint64_t max_n, const TotalCostFn& closed_form) {
  const std::string name = "recurrence vs closed form (4 <= n <= " + std::to_string(max_n) + ")";
  const TotalCostFn formula =
      closed_form ? closed_form : [](StrategyKind s, std::uint64_t n) { return total_cost_closed_form(s, n); };
  for (const StrategyKind strategy : kAllStrategies) {
    const CostTable table =
        solve_recurrence([strategy](std::uint64_t n) { return expected_partition_cost(strategy, n); }, max_n);
    for (std::uint64_t n = 4; n <= max_n; ++n) {
      const Rational closed = formula(strategy, n);
      if (closed != table.at(n)) {
        return fail(name, mismatch(std::string(to_string(strategy)), n, closed, table.at(n)));
      }
    }
  }
  return {name, true, ""};
}

Rational exhaustive_mean_comparisons(StrategyKind strategy, std::uint64_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  mpz_class total = 0;
  mpz_class count = 0;
  do {
    total += static_cast<unsigned long>(dual_pivot_sort(perm, strategy).comparisons);
    count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(total, count);
}

CheckResult check_permutation_oracle(std::uint64_t max_n) {
  const std::string name = "permutation brute force (2 <= n <= " + std::to_string(max_n) + ")";
  for (const StrategyKind strategy : kAllStrategies) {
    for (std::uint64_t n = 2; n <= max_n; ++n) {
      const Rational mean = exhaustive_mean_comparisons(strategy, n);
      const Rational expected = expected_total_cost(strategy, n);
      if (mean != expected) return fail(name, mismatch(std::string(to_string(strategy)), n, mean, expected));
    }
  }
  return {name, true, ""};
}

std::vector<CheckResult> run_verify(std::uint64_t identity_max_n) {
  if (identity_max_n > kIdentityCap) {
    throw std::out_of_range("verify: --max-n " + std::to_string(identity_max_n) + " exceeds cap " +
                            std::to_string(kIdentityCap));
  }
  return {
      check_zero_identity(identity_max_n),
      check_path_enumeration(),
      check_point_uniformity(),
      check_varlen_mixture(),
      check_recurrence_closed_form(),
      check_permutation_oracle(),
  };
}

}  // namespace dpqs
