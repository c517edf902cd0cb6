#pragma once

#include <ostream>

namespace bruhat::cli {

/// Exit codes of the command-line tool.
enum Exit : int { ok = 0, domain_error = 1, bad_input = 2, axiom_failure = 3 };

/// Runs one invocation. Results go to `out` as a single line of JSON,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bruhat::cli
