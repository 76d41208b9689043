#pragma once

#include <ostream>

namespace qgtile {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Entry point of the `qgtile` tool; `out` receives results when no --out
/// path is given, `err` receives diagnostics.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgtile
