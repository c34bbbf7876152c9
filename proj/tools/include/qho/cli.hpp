#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qho::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `qho <args...>` (args excludes the program name).
/// Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qho::cli
