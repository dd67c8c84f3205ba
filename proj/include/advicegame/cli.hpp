#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace advicegame {

// Full command-line entry point, stream-parameterized so tests can drive
// it without spawning processes. args excludes the program name.
//
// Exit codes: 0 success, 1 domain or I/O error, 2 usage error,
// 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace advicegame
