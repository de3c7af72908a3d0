#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bupoly::cli {

enum ExitCode : int {
  kOk = 0,
  kNotVerified = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// Environment variable holding the default --jobs value.
inline constexpr const char* kJobsEnv = "BUPOLY_JOBS";

/// Runs the command line (args[0] is the program name) against the given
/// streams and returns the process exit code. Subcommands: factor, sigma,
/// verify, search, tables.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bupoly::cli
