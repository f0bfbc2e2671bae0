// Command-line front end.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cpoly {

/// Exit codes: 0 success, 1 a cross-check failed, 2 malformed input or
/// arguments, 3 internal error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpoly
