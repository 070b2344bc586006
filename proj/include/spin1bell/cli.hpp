#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spin1bell::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit statuses of the command-line front end.
enum ExitStatus : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` (or the --out file); diagnostics and per-check lines go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spin1bell::cli
