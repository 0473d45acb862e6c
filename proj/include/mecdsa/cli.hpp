#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mecdsa::cli {

/// Process exit statuses. Scripts can tell a refused signature (1) apart
/// from unusable input (2) and I/O trouble (3).
enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kMalformed = 2,
  kIoError = 3,
};

/// Runs one command line (args[0] is the program name). Messages given as
/// "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mecdsa::cli
