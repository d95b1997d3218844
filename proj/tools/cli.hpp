#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sccd {

/// The `sccd` command line without argv[0]. Exit codes: 0 success, 1 failed
/// check or unsatisfiable request, 2 usage or input error.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sccd
