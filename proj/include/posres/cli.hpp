#pragma once

#include <ostream>

namespace posres {

enum ExitCode { kExitOk = 0, kExitNotEstablished = 1, kExitInputError = 2, kExitLimit = 3 };

// Entry point of the posres command-line tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posres
