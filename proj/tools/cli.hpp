#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hatperm::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2 };

// Runs the command line `args` (without the program name), writing results to
// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hatperm::cli
