#pragma once

// Command-line front end. JSON goes to `out`, diagnostics to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace uep {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitStalled = 2, kExitInput = 3 };

/// args excludes the program name. "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace uep
