#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dblgpd::cli {

/// Exit codes: 0 success, 1 a check or audit failed, 2 bad input.
enum Exit : int { ok = 0, check_failed = 1, input_error = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dblgpd::cli
