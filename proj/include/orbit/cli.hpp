#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbit::cli {

enum ExitCode : int { kOk = 0, kSpecError = 1, kIdentityViolation = 2 };

/// Runs one command line (args excludes the program name). The JSON report
/// goes to `out`; diagnostics and the --verbose summary go to `err`. A spec
/// path of "-" or no path reads the spec from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace orbit::cli
