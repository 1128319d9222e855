// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frank {

/// Exit status: 0 success, 1 usage, input or precondition error, 2 indeterminate.
enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_indeterminate = 2 };

/// Runs one command line (args[0] is the program name). Summaries and JSON
/// go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frank
