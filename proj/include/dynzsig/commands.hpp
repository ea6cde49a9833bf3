#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynzsig/factor.hpp"

namespace dynzsig {

enum ExitCode : int {
  kExitOk = 0,
  kExitHypothesis = 1,
  kExitConfig = 2,
  kExitBudget = 3,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_budget = 1'000'000;
  std::size_t digit_budget = 100'000;
  double tol = 1e-6;
  std::uint64_t seed = 0x5eed;
  std::string cache_path;  // empty: no cache
  std::string format = "json";

  /// Throws ConfigError.
  void validate() const;
  FactorBudget factor_budget() const;
};

/// Runs one invocation; args excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace dynzsig
