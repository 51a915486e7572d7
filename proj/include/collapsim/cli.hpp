#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace collapsim::cli {

enum ExitCode : int { success = 0, runtime_failure = 1, usage_error = 2 };

// Parses args (without the program name) and runs the selected subcommand.
// Results go to out or to --output; diagnostics go to err.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace collapsim::cli
