#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowgamma {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_resource = 3 };

/// Parses and runs one verb. The result goes to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowgamma
