#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace teichtet {

/// Runs the command-line tool. Returns 0 on success, 1 on usage or domain
/// errors, 2 on internal invariant failures. All output is byte-deterministic
/// for identical inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teichtet
