#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gonality {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;  // bad arguments, unreadable input, exhausted budget

/// Runs one command line (without the program name). Results go to `out` unless --out
/// names a file; diagnostics go to `err`. Every JSON result starts with a "config" block
/// whose "argv" reproduces the result byte for byte through `replay`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gonality
