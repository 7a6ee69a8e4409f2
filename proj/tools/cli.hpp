#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compnum::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
};

/// Runs one invocation. `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace compnum::cli
