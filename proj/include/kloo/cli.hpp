#pragma once

// Command-line front end.  run_cli is the whole program minus main(), taking
// explicit streams so tests can drive it in-process.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 invalid configuration.

#include <iosfwd>
#include <string>
#include <vector>

namespace kloo {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kloo
