#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gog::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kUsageError = 2,
  kPropertyFailure = 3,
};

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suites: convolution, ode, parity, growth, oracle. Returns an empty vector
/// for an unknown name.
std::vector<PropertyResult> run_suite(const std::string& suite, unsigned long long seed,
                                      unsigned long long bound);

}  // namespace gog::cli
