#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercomplex::cli {

/// Exit statuses of `run`.
enum Exit : int {
  expected = 0,    // the outcome matches what the theory predicts for this input
  unexpected = 1,  // a verifier disagreed with its expectation, or the library refused the input
  usage = 2,       // bad flags or unparseable literals
};

/// Runs one command line, without the program name, writing the report to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercomplex::cli
