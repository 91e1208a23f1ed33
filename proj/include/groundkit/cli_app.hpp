#pragma once

#include <string>
#include <vector>

namespace groundkit::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 I/O error, 2 format/usage error, 3 size cap exceeded, 4 verification
// failure.
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, const char* const* argv);

}  // namespace groundkit::cli
