#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowdiv {

// Runs one CLI invocation. args excludes the program name. Exit codes:
// 0 success / expectation met, 1 expectation failed, 64 parse or usage
// error, 65 build/validation/resource error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowdiv
