#include "compgraph/ranking.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

#include "compgraph/error.hpp"

namespace compgraph {

namespace {

// Empty string when `order` is a permutation of 1..n, otherwise the reason.
std::string permutation_defect(std::span<const NodeId> order) {
  const auto n = order.size();
  std::vector<bool> seen(n + 1, false);
  for (NodeId x : order) {
    if (x < 1 || x > n) {
      return "id " + std::to_string(x) + " outside 1.." + std::to_string(n);
    }
    if (seen[x]) return "duplicate id " + std::to_string(x);
    seen[x] = true;
  }
  return {};
}

}  // namespace

Ranking::Ranking(std::vector<NodeId> order) : order_(std::move(order)) {
  if (order_.empty()) throw Error(ErrorKind::InvalidSize, "a ranking needs at least one node");
  if (auto defect = permutation_defect(order_); !defect.empty()) {
    throw Error(ErrorKind::NonPermutationLine, defect);
  }
  position_.assign(order_.size() + 1, 0);
  for (std::size_t k = 0; k < order_.size(); ++k) position_[order_[k]] = k + 1;
}

Ranking Ranking::identity(std::size_t n) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{1});
  return Ranking(std::move(order));
}

NodeId Ranking::at(Position k) const {
  if (k < 1 || k > order_.size()) {
    throw Error(ErrorKind::InvalidSize, "position " + std::to_string(k) + " out of range");
  }
  return order_[k - 1];
}

Position Ranking::position_of(NodeId x) const {
  if (x < 1 || x > order_.size()) {
    throw Error(ErrorKind::UnknownNode, "node " + std::to_string(x));
  }
  return position_[x];
}

bool Ranking::precedes(NodeId i, NodeId j) const {
  const auto pi = position_of(i);
  const auto pj = position_of(j);
  if (i == j) throw Error(ErrorKind::SameNode, "node " + std::to_string(i));
  return pi < pj;
}

bool Ranking::is_identity() const noexcept {
  for (std::size_t k = 0; k < order_.size(); ++k) {
    if (order_[k] != k + 1) return false;
  }
  return true;
}

RankingFamily::RankingFamily(std::vector<Ranking> rankings) : rankings_(std::move(rankings)) {
  if (rankings_.empty()) throw Error(ErrorKind::Empty, "a family needs at least one ranking");
  n_ = rankings_.front().size();
  for (const auto& c : rankings_) {
    if (c.size() != n_) {
      throw Error(ErrorKind::LengthMismatch, "rankings of " + std::to_string(n_) + " and " +
                                                 std::to_string(c.size()) + " nodes");
    }
  }
}

RankingFamily parse_family(std::istream& in) {
  std::vector<Ranking> rankings;
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<NodeId> order;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      NodeId value = 0;
      const auto* begin = token.data();
      const auto* end = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc{} || ptr != end || value == 0) {
        throw Error(ErrorKind::NonPermutationLine,
                    "line " + std::to_string(line_no) + ": '" + token + "' is not a positive id");
      }
      order.push_back(value);
    }
    if (rankings.empty()) {
      n = order.size();
    } else if (order.size() != n) {
      throw Error(ErrorKind::LengthMismatch, "line " + std::to_string(line_no) + " has " +
                                                 std::to_string(order.size()) + " ids, expected " +
                                                 std::to_string(n));
    }
    if (auto defect = permutation_defect(order); !defect.empty()) {
      throw Error(ErrorKind::NonPermutationLine, "line " + std::to_string(line_no) + ": " + defect);
    }
    rankings.emplace_back(std::move(order));
  }
  if (rankings.empty()) throw Error(ErrorKind::Empty, "no rankings in input");
  return RankingFamily(std::move(rankings));
}

RankingFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

std::string format_family(const RankingFamily& family) {
  std::string out;
  for (const auto& c : family) {
    bool first = true;
    for (NodeId x : c.order()) {
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::vector<NodePair> inversions(const Ranking& c) {
  std::vector<NodePair> out;
  const auto n = static_cast<NodeId>(c.size());
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      if (c.position_of(i) > c.position_of(j)) out.push_back({i, j});
    }
  }
  return out;
}

std::pair<RankingFamily, RelabelMap> relabel_to_identity(const RankingFamily& family) {
  const auto n = family.node_count();
  RelabelMap map;
  map.forward.assign(n + 1, 0);
  map.backward.assign(n + 1, 0);
  const auto& first = family[0];
  for (Position k = 1; k <= n; ++k) {
    const auto old_id = first.at(k);
    map.forward[old_id] = static_cast<NodeId>(k);
    map.backward[k] = old_id;
  }

  std::vector<Ranking> rewritten;
  rewritten.reserve(family.size());
  for (const auto& c : family) {
    std::vector<NodeId> order;
    order.reserve(n);
    for (NodeId x : c.order()) order.push_back(map.forward[x]);
    rewritten.emplace_back(std::move(order));
  }
  return {RankingFamily(std::move(rewritten)), std::move(map)};
}

bool compete(const RankingFamily& family, NodeId i, NodeId j) {
  bool i_first = false;
  bool j_first = false;
  for (const auto& c : family) {
    if (c.precedes(i, j)) {
      i_first = true;
    } else {
      j_first = true;
    }
    if (i_first && j_first) return true;
  }
  return false;
}

RankingFamily random_family(std::size_t n, std::size_t r, std::uint64_t seed) {
  if (n < 1 || r < 1) throw Error(ErrorKind::InvalidSize, "random_family needs n >= 1 and r >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Ranking> rankings;
  rankings.reserve(r);
  std::vector<NodeId> order(n);
  for (std::size_t s = 0; s < r; ++s) {
    std::iota(order.begin(), order.end(), NodeId{1});
    std::shuffle(order.begin(), order.end(), rng);
    rankings.emplace_back(order);
  }
  return RankingFamily(std::move(rankings));
}

}  // namespace compgraph
