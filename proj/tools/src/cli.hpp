#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympolar::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,         ///< unknown subcommand or bad flags
  kMalformedInput = 3,
  kBudgetExhausted = 4,
  kDomainError = 5,   ///< precondition, polarity domain or dimension error
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "SYMPOLAR_OUT_DIR";

/// argv[0] is the program name. Results go to `out`, the echoed effective
/// configuration and diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace sympolar::cli
