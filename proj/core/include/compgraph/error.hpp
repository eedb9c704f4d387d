#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compgraph {

enum class ErrorKind {
  NonPermutationLine,
  LengthMismatch,
  Empty,
  UnknownNode,
  SameNode,
  InvalidSize,
  InvalidGraph,
  TooFewRankings,
  PartitionMismatch,
  Unordered,
  InvalidOrder,
  UnknownFixture,
  CliqueLimit,
  SearchInconclusive,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// Thrown by every library operation that rejects its input. The kind is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace compgraph
