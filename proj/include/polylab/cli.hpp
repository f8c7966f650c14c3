#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polylab {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitBadInput = 2,
};

/**
 * Runs one CLI invocation. `args` excludes the program name. Results go to
 * `out` as {"result": ..., "meta": {...}}; errors go to `err` as
 * {"error": {...}}.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polylab
