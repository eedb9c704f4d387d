#include "compgraph/graph.hpp"

#include <algorithm>
#include <string>

#include "compgraph/error.hpp"

namespace compgraph {

namespace {

void check_endpoints(std::size_t n, NodeId u, NodeId v) {
  if (u < 1 || u > n || v < 1 || v > n) {
    throw Error(ErrorKind::InvalidGraph, "endpoint of {" + std::to_string(u) + "," +
                                             std::to_string(v) + "} outside 1.." +
                                             std::to_string(n));
  }
  if (u == v) throw Error(ErrorKind::InvalidGraph, "self-loop at " + std::to_string(u));
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t n)
    : n_(n), adjacency_(n * n, 0), neighbors_(n + 1) {}

UndirectedGraph::UndirectedGraph(std::size_t n, std::span<const Edge> edges)
    : UndirectedGraph(n) {
  for (const auto& e : edges) {
    check_endpoints(n_, e.first, e.second);
    adjacency_[(e.first - 1) * n_ + (e.second - 1)] = 1;
    adjacency_[(e.second - 1) * n_ + (e.first - 1)] = 1;
  }
  index_edges();
}

void UndirectedGraph::index_edges() {
  edges_.clear();
  for (auto& list : neighbors_) list.clear();
  const auto n = static_cast<NodeId>(n_);
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = 1; v <= n; ++v) {
      if (!adjacent(u, v)) continue;
      neighbors_[u].push_back(v);
      if (u < v) edges_.push_back({u, v});
    }
  }
}

void UndirectedGraph::check_node(NodeId u) const {
  if (u < 1 || u > n_) throw Error(ErrorKind::UnknownNode, "node " + std::to_string(u));
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  return adjacent(u, v);
}

std::span<const NodeId> UndirectedGraph::neighbors(NodeId u) const {
  check_node(u);
  return neighbors_[u];
}

GraphBuilder::GraphBuilder(std::size_t n) : graph_(n) {}

void GraphBuilder::add_edge(NodeId u, NodeId v) {
  check_endpoints(graph_.n_, u, v);
  graph_.adjacency_[(u - 1) * graph_.n_ + (v - 1)] = 1;
  graph_.adjacency_[(v - 1) * graph_.n_ + (u - 1)] = 1;
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const { return graph_.has_edge(u, v); }

UndirectedGraph GraphBuilder::build() && {
  graph_.index_edges();
  return std::move(graph_);
}

DirectedGraph::DirectedGraph(std::size_t n) : n_(n), adjacency_(n * n, 0) {}

DirectedGraph::DirectedGraph(std::size_t n, std::span<const Arc> arcs) : DirectedGraph(n) {
  for (const auto& a : arcs) {
    check_endpoints(n_, a.from, a.to);
    adjacency_[(a.from - 1) * n_ + (a.to - 1)] = 1;
  }
  const auto count = static_cast<NodeId>(n_);
  for (NodeId u = 1; u <= count; ++u) {
    for (NodeId v = 1; v <= count; ++v) {
      if (adjacency_[(u - 1) * n_ + (v - 1)] != 0) arcs_.push_back({u, v});
    }
  }
}

bool DirectedGraph::has_arc(NodeId from, NodeId to) const {
  if (from < 1 || from > n_ || to < 1 || to > n_) {
    throw Error(ErrorKind::UnknownNode,
                "arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  return adjacency_[(from - 1) * n_ + (to - 1)] != 0;
}

UndirectedGraph complement_graph(const UndirectedGraph& g) {
  const auto n = static_cast<NodeId>(g.node_count());
  GraphBuilder builder(n);
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) {
      if (!g.has_edge(u, v)) builder.add_edge(u, v);
    }
  }
  return std::move(builder).build();
}

UndirectedGraph relabel_graph(const UndirectedGraph& g, std::span<const NodeId> rename) {
  if (rename.size() != g.node_count() + 1) {
    throw Error(ErrorKind::InvalidOrder, "relabelling must cover every node");
  }
  GraphBuilder builder(g.node_count());
  for (const auto& e : g.edges()) builder.add_edge(rename[e.first], rename[e.second]);
  return std::move(builder).build();
}

}  // namespace compgraph
