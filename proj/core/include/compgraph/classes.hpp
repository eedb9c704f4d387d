#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "compgraph/graph.hpp"

namespace compgraph {

/// Outcome of a bounded search. None means the search space was exhausted;
/// Unknown means the bound stopped it first.
enum class SearchOutcome { Found, None, Unknown };

std::string_view to_string(SearchOutcome outcome);

template <class Witness>
struct SearchStatus {
  SearchOutcome outcome = SearchOutcome::Unknown;
  std::optional<Witness> witness;
  std::size_t bound = 0;

  [[nodiscard]] bool found() const noexcept { return outcome == SearchOutcome::Found; }
  [[nodiscard]] bool none() const noexcept { return outcome == SearchOutcome::None; }
  [[nodiscard]] bool unknown() const noexcept { return outcome == SearchOutcome::Unknown; }
};

/// A relabelling of the nodes 1..n onto ranks 1..n.
class VertexOrder {
 public:
  /// `sequence[k]` is the node given rank k+1.
  static VertexOrder from_sequence(std::vector<NodeId> sequence);
  /// `rank_of[x]` is the rank of node x; slot 0 is ignored.
  static VertexOrder from_ranks(std::span<const Position> rank_of);
  static VertexOrder identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return sequence_.size(); }
  [[nodiscard]] Position rank_of(NodeId x) const { return rank_.at(x); }
  [[nodiscard]] NodeId at(Position k) const { return sequence_.at(k - 1); }
  [[nodiscard]] std::span<const NodeId> sequence() const noexcept { return sequence_; }

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  explicit VertexOrder(std::vector<NodeId> sequence);

  std::vector<NodeId> sequence_;
  std::vector<Position> rank_;  // slot 0 unused
};

// --- chordal -----------------------------------------------------------------

/// Lexicographic breadth-first search visit order, ties broken by smallest id.
std::vector<NodeId> lex_bfs(const UndirectedGraph& g);

/// True iff each node's neighbours that come later in `order` form a clique.
bool is_perfect_elimination_order(const UndirectedGraph& g, std::span<const NodeId> order);

struct ChordalResult {
  bool chordal = false;
  std::optional<std::vector<NodeId>> elimination_order;
};

/// Reverse LexBFS order checked as a perfect elimination order.
ChordalResult is_chordal(const UndirectedGraph& g);

// --- comparability ----------------------------------------------------------

inline constexpr std::size_t kOrientationCrossCheckNodes = 8;
inline constexpr std::size_t kOrientationStepBudget = 2'000'000;

/// True iff `d` orients every edge of g exactly once and is transitively closed.
bool is_transitive_orientation(const UndirectedGraph& g, const DirectedGraph& d);

/// Transitive orientation by implication-class forcing (Golumbic's
/// G-decomposition). For graphs with at most `cross_check_nodes` nodes the
/// answer is re-derived by exhaustive search and a disagreement throws
/// InternalInconsistency. Never Unknown.
SearchStatus<DirectedGraph> transitive_orientation(
    const UndirectedGraph& g, std::size_t cross_check_nodes = kOrientationCrossCheckNodes);

/// Backtracking over edge orientations with transitivity pruning. Unknown when
/// more than `step_budget` partial assignments are visited.
SearchStatus<DirectedGraph> exhaustive_transitive_orientation(
    const UndirectedGraph& g, std::size_t step_budget = kOrientationStepBudget);

bool is_comparability(const UndirectedGraph& g);

/// g and its complement are both comparability graphs.
bool is_permutation_graph(const UndirectedGraph& g);

// --- vertex orders ----------------------------------------------------------

inline constexpr std::size_t kDefaultOrderSearchNodes = 12;

/// For every edge {a,b} and every x ranked strictly between them, x is linked
/// to a or to b. Throws InvalidOrder when the order does not cover g's nodes.
bool verify_semi_cohesive(const UndirectedGraph& g, const VertexOrder& order);

/// Semi-cohesive, and links a-x, x-b with a < x < b force the link a-b.
bool verify_cohesive(const UndirectedGraph& g, const VertexOrder& order);

/// Lexicographically least semi-cohesive order, by backtracking. Unknown when
/// g has more than `max_nodes` nodes.
SearchStatus<VertexOrder> find_semi_cohesive_order(
    const UndirectedGraph& g, std::size_t max_nodes = kDefaultOrderSearchNodes);

/// Lexicographically least cohesive order; same bound semantics.
SearchStatus<VertexOrder> find_cohesive_order(const UndirectedGraph& g,
                                              std::size_t max_nodes = kDefaultOrderSearchNodes);

/// Visits every semi-cohesive order in lexicographic order until `visit`
/// returns false. Returns false if stopped early.
bool for_each_semi_cohesive_order(const UndirectedGraph& g,
                                  const std::function<bool(const VertexOrder&)>& visit);

/// Nodes other than i and j linked to i or to j (union of the neighbourhoods).
NodeSet common_neighbours(const UndirectedGraph& g, NodeId i, NodeId j);

// --- classification ---------------------------------------------------------

struct ClassificationReport {
  bool chordal = false;
  bool comparability = false;
  bool permutation = false;
  SearchStatus<VertexOrder> semi_cohesive;
  SearchStatus<VertexOrder> cohesive;

  std::optional<std::vector<NodeId>> elimination_order;
  std::optional<DirectedGraph> orientation;
  std::optional<DirectedGraph> complement_orientation;
};

/// Runs every recognizer and cross-checks the answers against each other
/// (cohesive order exists iff permutation graph, permutation graphs have a
/// semi-cohesive order, witnesses re-verified). Any contradiction throws
/// InternalInconsistency.
ClassificationReport classify(const UndirectedGraph& g,
                              std::size_t max_nodes = kDefaultOrderSearchNodes);

}  // namespace compgraph
