#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bimclp {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kRuleFailed = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name. `--facts -` and
/// `--scenario -` read from `in`; `--x3d -` writes the scene to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bimclp
