#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace marf::cli {

// Exit codes: 0 success/true, 1 false/empty, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace marf::cli
