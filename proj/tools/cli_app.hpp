#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitope_kit::cli {

/// Runs one command line (program name excluded). Exit codes: 0 success or
/// consistent result, 1 internal inconsistency, 2 usage or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitope_kit::cli
