#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace htlab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2, kPrecision = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace htlab::cli
