#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lesq::cli {

/// Exit statuses of `run`.
enum Status : int {
  kOk = 0,           // success, or "member"
  kNonMember = 1,    // well-formed query whose answer is "no"
  kUsage = 2,        // malformed arguments or input
  kUnsupported = 3,  // e.g. inequalities for even m
  kInconsistent = 4, // two decision routes disagreed
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lesq::cli
