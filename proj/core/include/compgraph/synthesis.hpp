#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compgraph/classes.hpp"
#include "compgraph/graph.hpp"
#include "compgraph/ranking.hpp"

namespace compgraph {

UndirectedGraph cycle_graph(std::size_t n);
UndirectedGraph complete_graph(std::size_t n);
UndirectedGraph edgeless_graph(std::size_t n);
UndirectedGraph path_graph(std::size_t n);

/// A named catalogue graph, with its generating family where one is known.
struct Fixture {
  std::string name;
  UndirectedGraph graph;
  std::optional<RankingFamily> family;
};

/// C3, C4, C5, C6, C7, C9, P3, S3 (3-sun), comp_C6, X176, and the
/// parameterised cycle(n), complete(n), edgeless(n). Throws UnknownFixture.
Fixture fixture(std::string_view name);

/// The fixed names accepted by fixture(), parameterised ones excluded.
std::vector<std::string> fixture_names();

struct SynthesisOptions {
  std::size_t max_rankings = 8;
  /// Graphs with more nodes are answered Unknown.
  std::size_t max_nodes = 12;
  /// Per candidate first ranking, shared by permutation enumeration and cover search.
  std::size_t step_budget = 1'000'000;
  /// Answer permutation graphs directly with the two linear orders built from
  /// transitive orientations of the graph and its complement.
  bool permutation_shortcut = true;
};

/// Searches for at most max_rankings rankings whose competitivity graph is g.
/// Found carries a certificate that has been rebuilt and compared to g; None
/// means no such family exists (no semi-cohesive order, or every candidate
/// first ranking was searched exhaustively).
SearchStatus<RankingFamily> find_generating_family(const UndirectedGraph& g,
                                                   const SynthesisOptions& options = {});

}  // namespace compgraph
