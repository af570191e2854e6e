#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdec {

/// Runs the command-line surface. Exit codes: 0 success / property holds,
/// 1 verification answered false, 2 usage or input errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace symdec
