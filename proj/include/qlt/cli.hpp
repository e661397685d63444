#pragma once

#include <string>
#include <vector>

namespace qlt::cli {

// Runs one CLI invocation. Exit codes: 0 success, 2 usage error,
// 3 numerical failure (any library error; its name goes to stderr).
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace qlt::cli
