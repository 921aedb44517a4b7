#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oneplanar::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kBudget = 2, kUsage = 3 };

/// Runs one command line; args excludes the program name. Graph and drawing
/// files that do not exist are looked up in $ONEPLANAR_FIXTURES; "-" or a
/// missing positional reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace oneplanar::cli
