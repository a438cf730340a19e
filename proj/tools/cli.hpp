#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopdom::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 parse or I/O error, 2 a verdict or campaign mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopdom::cli
