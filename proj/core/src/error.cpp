#include "compgraph/error.hpp"

namespace compgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPermutationLine: return "NonPermutationLine";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::SameNode: return "SameNode";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::TooFewRankings: return "TooFewRankings";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::Unordered: return "Unordered";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::CliqueLimit: return "CliqueLimit";
    case ErrorKind::SearchInconclusive: return "SearchInconclusive";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace compgraph
