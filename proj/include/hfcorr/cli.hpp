#pragma once

#include <iosfwd>

namespace hfcorr {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidArguments = 2,
  kExitNoEntanglement = 3,
  kExitIoFailure = 4,
};

/// Parses argv and runs one of the subcommands (sweep, point,
/// death-radius, critical-kt), writing results to `out` and diagnostics to
/// `err`. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hfcorr
