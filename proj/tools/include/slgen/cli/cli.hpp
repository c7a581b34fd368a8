#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slgen::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad flags, unparsable field/matrix/polynomial text
  kPrecondition = 2,  // mathematical precondition or known obstruction
  kInternal = 3,      // verification failed or a retry budget ran out
};

/// Runs one command. `args` excludes the program name. JSON and text
/// reports go to `out`, diagnostics to `err`; `in` feeds `verify` when no
/// --input file is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

/// "2,3,5-12" -> {2, 3, 5, 6, ..., 12}. Throws slgen::ParseError.
std::vector<unsigned> parse_n_list(const std::string& text);

}  // namespace slgen::cli
