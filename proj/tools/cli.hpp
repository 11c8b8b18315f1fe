#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anick::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 ok, 1 internal failure, 2 input error, 3 degree bound / certification.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace anick::cli
