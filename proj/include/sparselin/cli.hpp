#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparselin::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kUsageOrDataError = 1,
  kNumericalFailure = 2,
};

/// Runs `train`, `predict` or `eval`. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparselin::cli
