#pragma once

#include <iosfwd>

namespace sgp {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitInSgp = 0,
    kExitNotSgp = 1,
    kExitUsage = 2,
    kExitOracleBound = 3,
};

/// Entry point of the `sgp` tool; writes results to `out` and diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgp
