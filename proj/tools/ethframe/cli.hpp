#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ethframe::cli {

// sysexits-style process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitCantCreate = 73;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ethframe::cli
