#pragma once

#include <iosfwd>

namespace genusgrid {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitProperty = 2, kExitBudget = 3 };

/// Subcommands gen, verify, weights dump, match, schema normalize and double.
/// Results go to `out` as JSON (CSV for weights dump), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genusgrid
