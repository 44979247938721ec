#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catpoly::cli {

// Runs the command line given by args (without the program name), writing
// results to out and diagnostics to err. Returns 0 on success, 1 when a
// verification check reports failures, 2 on bad input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catpoly::cli
