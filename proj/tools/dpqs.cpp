// Command-line harness: verification suites, Monte Carlo runs and CSV output.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpqs/classify.hpp"
#include "dpqs/experiment.hpp"
#include "dpqs/verify.hpp"

namespace {

constexpr int kUsageError = 2;

/// Sends `emit` to --output, or stdout when it is empty. Returns the exit status.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) {
      std::cerr << "error: failed writing to standard output\n";
      return 1;
    }
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  emit(file);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing " << path << '\n';
    return 1;
  }
  return 0;
}

int run_verify(std::uint64_t max_n) {
  if (max_n > dpqs::kIdentityCap) {
    std::cerr << "error: --max-n " << max_n << " exceeds the cap of " << dpqs::kIdentityCap << '\n';
    return kUsageError;
  }
  bool all = true;
  for (const dpqs::CheckResult& r : dpqs::run_verify(max_n)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << '\n';
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-pivot quicksort comparison counts: verification and experiments"};
  app.require_subcommand(1);

  std::string strategy_name = "clairvoyant";
  std::vector<std::uint64_t> sizes;
  std::uint64_t n = 0;
  std::uint64_t trials = dpqs::kDefaultTrials;
  std::uint64_t seed = dpqs::kDefaultSeed;
  std::uint64_t max_n = 200;
  unsigned threads = 0;
  std::string output;
  bool exhaustive = false;
  bool full_grid = false;

  const auto add_strategy = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", strategy_name, "clairvoyant or count")
        ->check(CLI::IsMember({"clairvoyant", "count"}))
        ->capture_default_str();
  };
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output, "CSV destination (default: standard output)");
  };

  auto* verify = app.add_subcommand("verify", "Run the identity and oracle suites");
  verify->add_option("--max-n", max_n, "Upper n for the zero-count identity suite")
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Sort random permutations and count comparisons");
  add_strategy(simulate);
  simulate->add_option("--n,--sizes", sizes, "Input sizes (default 2^11..2^20)")->delimiter(',');
  simulate->add_option("--trials", trials, "Trials per size")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--seed", seed, "Master seed")->capture_default_str();
  simulate->add_option("--threads", threads, "Worker threads (0 = hardware)");
  simulate->add_flag("--full-grid", full_grid, "Default sizes up to 2^28");
  add_output(simulate);

  auto* exact = app.add_subcommand("exact", "Exact and asymptotic expected comparison counts");
  add_strategy(exact);
  exact->add_option("--n,--sizes", sizes, "Input sizes (default 2^11..2^20)")->delimiter(',');
  exact->add_flag("--full-grid", full_grid, "Default sizes up to 2^28");
  add_output(exact);

  auto* paths = app.add_subcommand("paths", "Zero tallies of random lattice paths");
  paths->add_option("--n", n, "Path length")->required();
  paths->add_option("--trials", trials, "Number of sampled paths")->capture_default_str();
  paths->add_option("--seed", seed, "Master seed")->capture_default_str();
  paths->add_option("--threads", threads, "Worker threads (0 = hardware)");
  paths->add_flag("--exhaustive", exhaustive, "Enumerate every path with its probability instead");
  add_output(paths);

  auto* distribution = app.add_subcommand("distribution", "Exact distribution of the number of zeros");
  distribution->add_option("--n", n, "Path length")->required();
  add_output(distribution);

  CLI11_PARSE(app, argc, argv);

  try {
    const dpqs::StrategyKind strategy = dpqs::parse_strategy(strategy_name).value();
    if (sizes.empty()) sizes = dpqs::default_sizes(full_grid);

    if (*verify) return run_verify(max_n);
    if (*simulate) {
      const dpqs::ExperimentConfig config{strategy, sizes, trials, seed, threads};
      return with_output(output, [&](std::ostream& out) { dpqs::write_simulation_csv(config, out); });
    }
    if (*exact) {
      return with_output(output, [&](std::ostream& out) { dpqs::write_exact_csv(strategy, sizes, out); });
    }
    if (*paths) {
      return with_output(output, [&](std::ostream& out) {
        if (exhaustive) {
          dpqs::write_paths_exhaustive_csv(n, out);
        } else {
          dpqs::write_paths_csv(n, trials, seed, out, threads);
        }
      });
    }
    if (*distribution) {
      return with_output(output, [&](std::ostream& out) { dpqs::write_distribution_csv(n, out); });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
