#pragma once

#include <iosfwd>

#include "json.hpp"
#include "nadyn/cli/job.hpp"

namespace nadyn::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kCheckFailed = 4,
  kBudget = 5,
};

struct RunResult {
  int status = kOk;
  nlohmann::json document;
};

// Never throws for input or domain problems: those become an "error" block
// and the matching exit status.
RunResult run(const JobSpec& job);

// Full front end: parse, run, write JSON to stdout or --output.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nadyn::cli
