#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nccr::cli {

// Runs one CLI invocation.  Results go to --out or `out`; the run report
// (command, input digest, timing, version) goes to `err`.  Exit codes:
// 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

extern const char* kVersion;

}  // namespace nccr::cli
