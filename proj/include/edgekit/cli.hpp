#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgekit {

/// Process exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_domain = 2, exit_convergence = 3 };

/// Parse and run one subcommand. Primary artifacts go to `out` (or the --out file),
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parse "start:stop:step" into the inclusive grid start, start + step, ... <= stop.
std::vector<double> parse_grid(const std::string& text);

/// Parse a comma-separated list of positive integers.
std::vector<int> parse_int_list(const std::string& text);

/// Shortest text of a double with 17 significant digits, as written in CSV output.
std::string format_number(double v);

}  // namespace edgekit
