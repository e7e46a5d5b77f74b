#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cvc {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_infeasible = 2, exit_not_free = 3 };

/// Runs one `cvc` command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cvc
