#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "compgraph/graph.hpp"
#include "compgraph/ranking.hpp"

namespace compgraph {

/// How build_graph decides which pairs compete. All strategies produce the
/// same edge set; the first two exist as cross-checks for the third.
enum class BuildStrategy {
  AllPairs,        // compare every pair of rankings
  Consecutive,     // compare only rankings s and s+1
  InversionUnion,  // relabel so the first ranking is the identity, union the inversions
};

std::string_view to_string(BuildStrategy strategy);
std::optional<BuildStrategy> parse_build_strategy(std::string_view name);

/// Competitivity graph: an edge between every pair of nodes that compete.
UndirectedGraph build_graph(const RankingFamily& family,
                            BuildStrategy strategy = BuildStrategy::InversionUnion);

/// Closed neighbourhood of i: i together with everything competing with it.
NodeSet competitivity_set(const UndirectedGraph& g, NodeId i);

inline constexpr std::size_t kDefaultCliqueNodeLimit = 64;

/// Sets of competitors, i.e. the maximal cliques of g. Each set ascending,
/// list sorted lexicographically. Refuses graphs with more than `node_limit`
/// nodes (CliqueLimit) since the enumeration is exponential.
std::vector<NodeSet> sets_of_competitors(const UndirectedGraph& g,
                                         std::size_t node_limit = kDefaultCliqueNodeLimit);

/// Same connected component; reflexive.
bool eventually_compete(const UndirectedGraph& g, NodeId i, NodeId j);

/// Arc i->j whenever i precedes j in some ranking. Needs at least two rankings.
DirectedGraph build_directed_graph(const RankingFamily& family);

}  // namespace compgraph
