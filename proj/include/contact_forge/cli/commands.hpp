#pragma once

#include <ostream>

namespace contact_forge::cli {

/// Exit codes of every command.
enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the contact-forge command line. Reports go to `out` (or --out),
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace contact_forge::cli
