#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trileib {

/// Runs the command line tool. Exit codes: 0 all checks pass, 1 a check
/// fails, 2 usage or input error.
int cli_dispatch(int argc, const char* const* argv);

/// Same, with explicit streams; `args` excludes the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trileib
