#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cheegerlab::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kValidationError = 3,
};

/// Entry point shared by main() and the tests. args excludes the program
/// name. With no explicit --json/--csv/--table, reports are tables when
/// `tty` is set and JSON otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty = false);

}  // namespace cheegerlab::cli
