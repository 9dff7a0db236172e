#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace effdiag::cli {

/// Exit codes of the effdiag command.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kSignatureError = 3,
  kLengthMismatch = 4,
};

/// Run the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effdiag::cli
