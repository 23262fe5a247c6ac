#ifndef HADPROD_TOOLS_CLI_HPP
#define HADPROD_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hadprod {

/// Exit codes of the command-line tool.
inline constexpr int exit_pass = 0;
/// Property fails or theorem violated.
inline constexpr int exit_fail = 1;
/// Parse, precondition or configuration error.
inline constexpr int exit_usage = 2;

/// Runs the tool on `args` (program name excluded), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hadprod

#endif
