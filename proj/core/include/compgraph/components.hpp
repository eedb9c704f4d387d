#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "compgraph/graph.hpp"
#include "compgraph/ranking.hpp"

namespace compgraph {

/// Closed 1-based position interval [first, last].
struct Interval {
  Position first = 0;
  Position last = 0;

  [[nodiscard]] std::size_t length() const noexcept { return last - first + 1; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct ComponentSet {
  NodeSet members;
  std::optional<Interval> interval;

  friend bool operator==(const ComponentSet&, const ComponentSet&) = default;
};

enum class PartitionSource { IntervalAlgorithm, GraphComponents };

/// Sets of eventual competitors. When `ordered` is set the sets follow the
/// total order between them, leader first, and every set carries its interval.
struct ComponentPartition {
  std::vector<ComponentSet> sets;
  PartitionSource source = PartitionSource::IntervalAlgorithm;
  bool ordered = false;

  /// Members only, each set sorted, list sorted: for order-insensitive comparison.
  [[nodiscard]] std::vector<NodeSet> canonical_sets() const;
};

/// Sets of eventual competitors straight from the rankings, by growing a
/// position interval [q, p] until every node seen in it by any ranking has all
/// of its positions inside it, then restarting at p + 1. Output is ordered.
ComponentPartition eventual_competitor_sets(const RankingFamily& family);

/// Connected components by breadth-first traversal, sorted by smallest member,
/// no intervals, unordered.
ComponentPartition components_oracle(const UndirectedGraph& g);

/// Same, annotated with intervals taken from the family's first ranking and
/// sorted by interval.
ComponentPartition components_oracle(const UndirectedGraph& g, const RankingFamily& family);

/// Sorts the sets by the relation "some member of A precedes some member of B
/// in some ranking", decided from a single witness pair. With
/// `verify_all_pairs` every cross pair in every ranking is checked to agree and
/// a disagreement throws InternalInconsistency. Throws TooFewRankings for r < 2
/// and PartitionMismatch when `part` is not the family's partition.
ComponentPartition order_components(const RankingFamily& family, const ComponentPartition& part,
                                    bool verify_all_pairs = false);

struct Extremes {
  NodeSet leader;
  NodeSet looser;
};

/// First and last set of an ordered partition; throws Unordered otherwise.
Extremes extremes(const ComponentPartition& part);

struct ConvexityViolation {
  std::size_t set_index = 0;
  std::size_t ranking_index = 0;  // 0-based
  NodeId a = 0;
  NodeId x = 0;
  NodeId b = 0;
};

struct ConvexityReport {
  bool convex = true;
  std::optional<ConvexityViolation> witness;

  explicit operator bool() const noexcept { return convex; }
};

/// Checks that no ranking places an outsider strictly between two members of
/// the same set. Throws PartitionMismatch if `part` does not partition 1..n.
ConvexityReport verify_convexity(const RankingFamily& family, const ComponentPartition& part);

}  // namespace compgraph
