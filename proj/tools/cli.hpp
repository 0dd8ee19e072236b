#ifndef CORNELL_TOOLS_CLI_HPP
#define CORNELL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cornell::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kSolver = 3,
    kTableFail = 4,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "v1,v2,..." or "start:stop:step" (stop included up to rounding). Throws std::invalid_argument.
std::vector<double> parse_range(const std::string& text);

}  // namespace cornell::cli

#endif  // CORNELL_TOOLS_CLI_HPP
