#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrmono {

// Whole command-line frontend; `args` excludes the program name.  Returns the
// process exit code: 0 success, 1 bad input, 2 failed internal cross-check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrmono
