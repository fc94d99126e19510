#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radon_nets::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInconsistent = 3;

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace radon_nets::cli
