#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilzeta::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs one command line (without the program name), writing the report to
/// out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilzeta::cli
