#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvhota::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kIoError = 2 };

/// Runs one invocation; args exclude the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvhota::cli
