#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpc {

/// Runs the command line given argv-style arguments (program name excluded).
/// Exit status: 0 all selected checks pass, 1 check failures, 2 usage, parse
/// or schema errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gpc
