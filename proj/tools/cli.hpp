#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ggg::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kVerified = 0,
    kClaimFailed = 1,
    kUsage = 2,
    kInconclusive = 3,
};

/// Runs `ggg <args...>` (args excludes the program name). Primary output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ggg::cli
