#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qel::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kCandidateFound = 3,
};

/// Runs the command line `args` (without the program name). The report goes
/// to `out` unless --out names a file; summaries and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qel::cli
