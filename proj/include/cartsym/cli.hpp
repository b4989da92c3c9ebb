#pragma once

#include <iosfwd>

namespace cartsym {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvariant = 2, kExitUndecided = 3 };

/// Entry point of the cartsym tool, writing results to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cartsym
