#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biortho::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kValidation = 2,
  kNumerical = 3,
};

/// Entry point of `biortho-m`; args excludes the program name. Data goes to
/// `out`, diagnostics and JSON error objects to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sorted *.json files in the shipped fixture directory, or in `dir`.
std::vector<std::string> fixture_files(const std::string& dir = "");

}  // namespace biortho::cli
