#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace compgraph::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kInconclusive = 3,
  kInternal = 4,
};

/// Entry point of the `compgraph` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compgraph::cli
