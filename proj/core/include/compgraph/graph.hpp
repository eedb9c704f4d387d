#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "compgraph/ranking.hpp"

namespace compgraph {

using Edge = NodePair;

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

struct Arc {
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple undirected graph on nodes 1..n. Immutable once built; edges are kept
/// canonical (first < second) and sorted, neighbour lists ascending.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(std::size_t n = 0);

  /// Edges may be given in either orientation and may repeat; self-loops and
  /// endpoints outside 1..n throw InvalidGraph.
  UndirectedGraph(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t node_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  /// False for u == v. Throws UnknownNode for ids outside 1..n.
  [[nodiscard]] bool has_edge(NodeId u, NodeId v) const;

  [[nodiscard]] std::span<const NodeId> neighbors(NodeId u) const;
  [[nodiscard]] std::size_t degree(NodeId u) const { return neighbors(u).size(); }

  void check_node(NodeId u) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend class GraphBuilder;

  [[nodiscard]] bool adjacent(NodeId u, NodeId v) const noexcept {
    return adjacency_[(static_cast<std::size_t>(u) - 1) * n_ + (v - 1)] != 0;
  }
  void index_edges();

  std::size_t n_ = 0;
  std::vector<unsigned char> adjacency_;  // n*n, row-major on 0-based ids
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> neighbors_;  // slot 0 unused
};

/// Accumulates edges into an adjacency matrix; cheaper than going through an
/// edge list when most pairs are tested anyway.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  void add_edge(NodeId u, NodeId v);
  [[nodiscard]] bool has_edge(NodeId u, NodeId v) const;
  [[nodiscard]] UndirectedGraph build() &&;

 private:
  UndirectedGraph graph_;
};

/// Simple directed graph on nodes 1..n without self-loops.
class DirectedGraph {
 public:
  explicit DirectedGraph(std::size_t n = 0);
  DirectedGraph(std::size_t n, std::span<const Arc> arcs);

  [[nodiscard]] std::size_t node_count() const noexcept { return n_; }
  [[nodiscard]] std::span<const Arc> arcs() const noexcept { return arcs_; }
  [[nodiscard]] bool has_arc(NodeId from, NodeId to) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> adjacency_;
  std::vector<Arc> arcs_;
};

/// Same node set, edge set replaced by all the missing pairs.
UndirectedGraph complement_graph(const UndirectedGraph& g);

/// Graph with edges renamed through `rename` (slot 0 unused).
UndirectedGraph relabel_graph(const UndirectedGraph& g, std::span<const NodeId> rename);

}  // namespace compgraph
