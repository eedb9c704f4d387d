#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace compgraph::cli {

struct SelfcheckOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t max_n = 8;
  std::size_t max_r = 5;
};

struct SelfcheckResult {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// Randomized invariant checks across every module on `trials` random families.
SelfcheckResult run_selfcheck(const SelfcheckOptions& options, std::ostream& log);

}  // namespace compgraph::cli
