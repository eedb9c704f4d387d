#pragma once

#include <gtest/gtest.h>

#include <string_view>
#include <vector>

#include "compgraph/error.hpp"
#include "compgraph/graph.hpp"
#include "compgraph/ranking.hpp"

namespace compgraph::test {

/// The four-ranking worked example on six nodes.
inline constexpr std::string_view kExample =
    "1 2 3 4 5 6\n1 3 4 2 5 6\n1 2 5 3 4 6\n3 2 6 1 5 4\n";

/// Its competitivity graph, worked out by hand from the inversion sets.
inline const std::vector<Edge> kExampleEdges{{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 4},
                                             {3, 5}, {4, 5}, {4, 6}, {5, 6}};

/// Kind of the compgraph::Error thrown by f; records a failure if none is.
template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no compgraph::Error thrown";
  return ErrorKind::InternalInconsistency;
}

inline RankingFamily family_of(std::initializer_list<std::vector<NodeId>> rows) {
  std::vector<Ranking> rankings;
  for (const auto& row : rows) rankings.emplace_back(row);
  return RankingFamily(std::move(rankings));
}

inline std::vector<Edge> edges_of(const UndirectedGraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

}  // namespace compgraph::test
