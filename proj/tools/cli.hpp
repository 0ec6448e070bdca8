#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnkit::cli {

/// Runs one invocation; args excludes the program name. Returns the exit
/// code: 0 success, 2 rejected input, 3 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bnkit::cli
