#include "compgraph/competitivity.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "compgraph/error.hpp"

namespace compgraph {

std::string_view to_string(BuildStrategy strategy) {
  switch (strategy) {
    case BuildStrategy::AllPairs: return "all-pairs";
    case BuildStrategy::Consecutive: return "consecutive";
    case BuildStrategy::InversionUnion: return "inversion-union";
  }
  return "inversion-union";
}

std::optional<BuildStrategy> parse_build_strategy(std::string_view name) {
  for (auto s : {BuildStrategy::AllPairs, BuildStrategy::Consecutive,
                 BuildStrategy::InversionUnion}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

// Adds every pair whose relative order differs between rankings a and b.
void add_exchanges(const Ranking& a, const Ranking& b, GraphBuilder& builder) {
  const auto n = static_cast<NodeId>(a.size());
  for (NodeId i = 1; i <= n; ++i) {
    const auto ai = a.position_of(i);
    const auto bi = b.position_of(i);
    for (NodeId j = i + 1; j <= n; ++j) {
      if ((ai < a.position_of(j)) != (bi < b.position_of(j))) builder.add_edge(i, j);
    }
  }
}

UndirectedGraph build_by_inversions(const RankingFamily& family) {
  const auto [relabelled, map] = relabel_to_identity(family);
  GraphBuilder builder(family.node_count());
  for (std::size_t s = 1; s < relabelled.size(); ++s) {
    for (const auto& inv : inversions(relabelled[s])) {
      builder.add_edge(map.to_old(inv.first), map.to_old(inv.second));
    }
  }
  return std::move(builder).build();
}

// Bron-Kerbosch with Tomita pivoting; candidate/excluded sets kept sorted.
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(const UndirectedGraph& g) : g_(g) {}

  std::vector<NodeSet> run() {
    NodeSet candidates(g_.node_count());
    for (std::size_t k = 0; k < candidates.size(); ++k) candidates[k] = static_cast<NodeId>(k + 1);
    NodeSet current;
    expand(current, std::move(candidates), {});
    std::sort(cliques_.begin(), cliques_.end());
    return std::move(cliques_);
  }

 private:
  NodeSet restrict_to_neighbors(const NodeSet& set, NodeId v) const {
    NodeSet out;
    for (NodeId x : set) {
      if (g_.has_edge(v, x)) out.push_back(x);
    }
    return out;
  }

  void expand(NodeSet& current, NodeSet candidates, NodeSet excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) {
        NodeSet clique = current;
        std::sort(clique.begin(), clique.end());
        cliques_.push_back(std::move(clique));
      }
      return;
    }

    // Pivot maximizing the number of candidates it covers.
    auto coverage = [&](NodeId u) {
      return std::count_if(candidates.begin(), candidates.end(),
                           [&](NodeId x) { return g_.has_edge(u, x); });
    };
    NodeId pivot = candidates.front();
    auto best = coverage(pivot);
    for (const auto* pool : {&candidates, &excluded}) {
      for (NodeId u : *pool) {
        if (const auto covered = coverage(u); covered > best) {
          best = covered;
          pivot = u;
        }
      }
    }

    NodeSet branch;
    for (NodeId v : candidates) {
      if (!g_.has_edge(pivot, v)) branch.push_back(v);
    }
    for (NodeId v : branch) {
      current.push_back(v);
      expand(current, restrict_to_neighbors(candidates, v), restrict_to_neighbors(excluded, v));
      current.pop_back();
      candidates.erase(std::find(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  const UndirectedGraph& g_;
  std::vector<NodeSet> cliques_;
};

}  // namespace

UndirectedGraph build_graph(const RankingFamily& family, BuildStrategy strategy) {
  const auto r = family.size();
  switch (strategy) {
    case BuildStrategy::AllPairs: {
      GraphBuilder builder(family.node_count());
      for (std::size_t s = 0; s < r; ++s) {
        for (std::size_t t = s + 1; t < r; ++t) add_exchanges(family[s], family[t], builder);
      }
      return std::move(builder).build();
    }
    case BuildStrategy::Consecutive: {
      GraphBuilder builder(family.node_count());
      for (std::size_t s = 0; s + 1 < r; ++s) add_exchanges(family[s], family[s + 1], builder);
      return std::move(builder).build();
    }
    case BuildStrategy::InversionUnion:
      return build_by_inversions(family);
  }
  return build_by_inversions(family);
}

NodeSet competitivity_set(const UndirectedGraph& g, NodeId i) {
  const auto neighbors = g.neighbors(i);
  NodeSet out(neighbors.begin(), neighbors.end());
  out.insert(std::lower_bound(out.begin(), out.end(), i), i);
  return out;
}

std::vector<NodeSet> sets_of_competitors(const UndirectedGraph& g, std::size_t node_limit) {
  if (g.node_count() > node_limit) {
    throw Error(ErrorKind::CliqueLimit, std::to_string(g.node_count()) +
                                            " nodes exceeds the clique enumeration limit of " +
                                            std::to_string(node_limit));
  }
  if (g.node_count() == 0) return {};
  return CliqueEnumerator(g).run();
}

bool eventually_compete(const UndirectedGraph& g, NodeId i, NodeId j) {
  g.check_node(i);
  g.check_node(j);
  if (i == j) return true;
  std::vector<bool> seen(g.node_count() + 1, false);
  std::queue<NodeId> frontier;
  frontier.push(i);
  seen[i] = true;
  while (!frontier.empty()) {
    const auto u = frontier.front();
    frontier.pop();
    for (NodeId v : g.neighbors(u)) {
      if (v == j) return true;
      if (!seen[v]) {
        seen[v] = true;
        frontier.push(v);
      }
    }
  }
  return false;
}

DirectedGraph build_directed_graph(const RankingFamily& family) {
  if (family.size() < 2) {
    throw Error(ErrorKind::TooFewRankings, "the precedence digraph needs at least two rankings");
  }
  const auto n = family.node_count();
  std::vector<Arc> arcs;
  std::vector<unsigned char> seen(n * n, 0);
  for (const auto& c : family) {
    const auto order = c.order();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = k + 1; l < n; ++l) {
        auto& slot = seen[(order[k] - 1) * n + (order[l] - 1)];
        if (slot == 0) {
          slot = 1;
          arcs.push_back({order[k], order[l]});
        }
      }
    }
  }
  return DirectedGraph(n, arcs);
}

}  // namespace compgraph
