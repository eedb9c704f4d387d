#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compgraph {

/// Nodes are labelled 1..n. Positions inside a ranking are 1-based as well.
using NodeId = std::uint32_t;
using Position = std::size_t;

/// Unordered node pair stored with first < second.
struct NodePair {
  NodeId first = 0;
  NodeId second = 0;

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// A full ranking of the nodes 1..n: a permutation kept together with its
/// inverse so that both "who is at position k" and "where is node x" are O(1).
class Ranking {
 public:
  /// Validates that `order` is a permutation of 1..order.size().
  explicit Ranking(std::vector<NodeId> order);

  static Ranking identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
  [[nodiscard]] std::span<const NodeId> order() const noexcept { return order_; }

  /// Node placed at 1-based position k.
  [[nodiscard]] NodeId at(Position k) const;

  /// 1-based position of node x. Throws UnknownNode.
  [[nodiscard]] Position position_of(NodeId x) const;

  /// True iff i appears before j. Throws UnknownNode / SameNode.
  [[nodiscard]] bool precedes(NodeId i, NodeId j) const;

  [[nodiscard]] bool is_identity() const noexcept;

  friend bool operator==(const Ranking& a, const Ranking& b) { return a.order_ == b.order_; }

 private:
  std::vector<NodeId> order_;
  std::vector<Position> position_;  // indexed by node id, slot 0 unused
};

/// Ordered, non-empty list of rankings over the same node set.
class RankingFamily {
 public:
  explicit RankingFamily(std::vector<Ranking> rankings);

  [[nodiscard]] std::size_t node_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return rankings_.size(); }
  [[nodiscard]] const Ranking& operator[](std::size_t s) const { return rankings_[s]; }
  [[nodiscard]] std::span<const Ranking> rankings() const noexcept { return rankings_; }

  auto begin() const noexcept { return rankings_.begin(); }
  auto end() const noexcept { return rankings_.end(); }

  friend bool operator==(const RankingFamily&, const RankingFamily&) = default;

 private:
  std::vector<Ranking> rankings_;
  std::size_t n_ = 0;
};

/// Bijection on 1..n; forward maps an original id to its new label.
struct RelabelMap {
  std::vector<NodeId> forward;   // slot 0 unused
  std::vector<NodeId> backward;  // slot 0 unused

  [[nodiscard]] NodeId to_new(NodeId old_id) const { return forward.at(old_id); }
  [[nodiscard]] NodeId to_old(NodeId new_id) const { return backward.at(new_id); }
};

/// Reads the rankings text format: one ranking per line, whitespace separated
/// ids, '#' comment lines and blank lines ignored.
RankingFamily parse_family(std::istream& in);
RankingFamily parse_family(std::string_view text);

/// Inverse of parse_family: one ranking per line, single spaces, trailing newline.
std::string format_family(const RankingFamily& family);

/// Pairs {i,j}, i<j, whose relative order in c is reversed; lexicographic order.
std::vector<NodePair> inversions(const Ranking& c);

/// Relabels nodes so that the first ranking becomes (1,2,...,n).
std::pair<RankingFamily, RelabelMap> relabel_to_identity(const RankingFamily& family);

/// True iff i and j exchange their relative order between two rankings.
bool compete(const RankingFamily& family, NodeId i, NodeId j);

/// r uniformly random permutations of 1..n, reproducible for a given seed.
RankingFamily random_family(std::size_t n, std::size_t r, std::uint64_t seed);

}  // namespace compgraph
