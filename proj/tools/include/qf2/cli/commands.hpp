#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qf2::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPrecondition = 1,
  kMalformed = 2,
  kInternal = 3,
};

/// Runs one subcommand; `args` excludes the program name. Results and error
/// objects are JSON on `out` (or the --out file); usage text goes to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qf2::cli
