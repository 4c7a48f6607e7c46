#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cabling::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,        // parse or validation failure
  kDomain = 3,       // input outside an operation's domain
  kConsistency = 4,  // an oracle identity failed
};

// Runs the command line `args` (program name excluded), writing results to
// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cabling::cli
