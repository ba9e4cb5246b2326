#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace surfknot {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitBound = 3 };

/// Runs one command line (without the program name). Results go to out, diagnostics
/// to err. Wherever a file is expected, "@text" supplies the contents inline.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfknot
