#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "compgraph/classes.hpp"
#include "compgraph/components.hpp"
#include "compgraph/graph.hpp"

namespace compgraph {

/// {"n":<int>,"edges":[[u,v],...]} with u<v, pairs sorted. Compact, no whitespace.
std::string graph_to_json(const UndirectedGraph& g);

/// Accepts the graph JSON above; pairs may come in any order or orientation.
/// Throws InvalidGraph on malformed input.
UndirectedGraph graph_from_json(std::string_view text);

/// Undirected DOT, every node declared, edges in sorted order.
std::string graph_to_dot(const UndirectedGraph& g);

/// {"sets":[{"members":[...],"interval":[p,q]},...]} in partition order.
std::string components_to_json(const ComponentPartition& part);

/// One line per set: index, interval, members, and a leader/looser tag when ordered.
std::string components_to_text(const ComponentPartition& part);

/// {"sets_of_competitors":[[...],...]}
std::string cliques_to_json(const std::vector<NodeSet>& cliques);

/// {"chordal":b,"comparability":b,"permutation":b,"semi_cohesive":"found|none|unknown",
///  "cohesive":"...","witnesses":{...}}
std::string classification_to_json(const ClassificationReport& report);

}  // namespace compgraph
