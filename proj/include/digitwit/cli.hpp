#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digitwit {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 when every verification passed, 1 when a witness failed its
/// checks, 2 on malformed input or a violated hypothesis.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digitwit
