#pragma once

// The quatlin command-line front end, callable in-process for tests.
//
// Exit codes: 0 success, 1 internal or I/O error, 2 parse or usage error,
// 3 singular function (solve), 4 functions not equal (equal).

#include <iosfwd>
#include <string>
#include <vector>

namespace quatlin::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kParseError = 2,
  kSingular = 3,
  kNotEqual = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace quatlin::cli
