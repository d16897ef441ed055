#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stirlab/identities.hpp"

namespace stirlab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,  // a verification failed or two routes disagreed
  kUsage = 2,
};

/// Runs `stirlab <poly|enum|verify> ...`. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable summary of verification reports; returns kMismatch if any failed.
int write_report_text(const std::vector<VerificationReport>& reports, std::ostream& out);

}  // namespace stirlab::cli
