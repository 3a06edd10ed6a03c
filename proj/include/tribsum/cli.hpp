#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tribsum::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kMismatch = 3,
  kOeisFailure = 4,
};

/// Runs one command line (args excludes the program name) and returns the
/// process exit status. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribsum::cli
