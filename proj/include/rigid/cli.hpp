#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rigid/certify.hpp"

namespace rigid {

/// Process exit codes.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitInconclusive = 2,
  kExitInputError = 3,
};

int exit_code_for(Verdict v);

/// Dispatch one command line (args excludes the program name). Results go to
/// out, diagnostics and usage text to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigid
