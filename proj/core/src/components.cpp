#include "compgraph/components.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "compgraph/error.hpp"

namespace compgraph {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

// set_of[x] = index of the set containing x. Throws if part is not a partition of 1..n.
std::vector<std::size_t> membership(const ComponentPartition& part, std::size_t n) {
  std::vector<std::size_t> set_of(n + 1, kUnassigned);
  std::size_t covered = 0;
  for (std::size_t s = 0; s < part.sets.size(); ++s) {
    if (part.sets[s].members.empty()) {
      throw Error(ErrorKind::PartitionMismatch, "empty set in partition");
    }
    for (NodeId x : part.sets[s].members) {
      if (x < 1 || x > n) {
        throw Error(ErrorKind::PartitionMismatch, "node " + std::to_string(x) + " outside 1.." +
                                                      std::to_string(n));
      }
      if (set_of[x] != kUnassigned) {
        throw Error(ErrorKind::PartitionMismatch, "node " + std::to_string(x) + " in two sets");
      }
      set_of[x] = s;
      ++covered;
    }
  }
  if (covered != n) throw Error(ErrorKind::PartitionMismatch, "partition misses some nodes");
  return set_of;
}

Interval span_in(const Ranking& c, const NodeSet& members) {
  Interval out{std::numeric_limits<Position>::max(), 0};
  for (NodeId x : members) {
    const auto p = c.position_of(x);
    out.first = std::min(out.first, p);
    out.last = std::max(out.last, p);
  }
  return out;
}

}  // namespace

std::vector<NodeSet> ComponentPartition::canonical_sets() const {
  std::vector<NodeSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    NodeSet members = s.members;
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComponentPartition eventual_competitor_sets(const RankingFamily& family) {
  const auto n = family.node_count();

  // Right-most position of each node over all rankings.
  std::vector<Position> last_position(n + 1, 0);
  for (const auto& c : family) {
    for (Position k = 1; k <= n; ++k) {
      auto& slot = last_position[c.at(k)];
      slot = std::max(slot, k);
    }
  }

  ComponentPartition part;
  part.source = PartitionSource::IntervalAlgorithm;
  part.ordered = true;
  std::vector<bool> taken(n + 1, false);

  Position q = 1;
  while (q <= n) {
    NodeSet members;
    Position p = q;
    Position scanned = q - 1;
    // Each round absorbs the positions added by the previous one; the interval
    // is final once a round leaves p unchanged.
    while (scanned < p) {
      const Position round_end = p;
      for (Position k = scanned + 1; k <= round_end; ++k) {
        for (const auto& c : family) {
          const auto x = c.at(k);
          if (taken[x]) continue;
          taken[x] = true;
          members.push_back(x);
          p = std::max(p, last_position[x]);
        }
      }
      scanned = round_end;
    }
    if (members.size() != p - q + 1) {
      throw Error(ErrorKind::InternalInconsistency,
                  "interval [" + std::to_string(q) + "," + std::to_string(p) + "] holds " +
                      std::to_string(members.size()) + " nodes");
    }
    std::sort(members.begin(), members.end());
    part.sets.push_back({std::move(members), Interval{q, p}});
    q = p + 1;
  }
  return part;
}

ComponentPartition components_oracle(const UndirectedGraph& g) {
  const auto n = static_cast<NodeId>(g.node_count());
  ComponentPartition part;
  part.source = PartitionSource::GraphComponents;
  part.ordered = false;
  std::vector<bool> seen(n + 1, false);
  for (NodeId start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    NodeSet members;
    std::queue<NodeId> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const auto u = frontier.front();
      frontier.pop();
      members.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.sets.push_back({std::move(members), std::nullopt});
  }
  return part;
}

ComponentPartition components_oracle(const UndirectedGraph& g, const RankingFamily& family) {
  if (family.node_count() != g.node_count()) {
    throw Error(ErrorKind::PartitionMismatch, "graph and family disagree on the node count");
  }
  auto part = components_oracle(g);
  for (auto& s : part.sets) s.interval = span_in(family[0], s.members);
  std::sort(part.sets.begin(), part.sets.end(),
            [](const ComponentSet& a, const ComponentSet& b) { return *a.interval < *b.interval; });
  return part;
}

ComponentPartition order_components(const RankingFamily& family, const ComponentPartition& part,
                                    bool verify_all_pairs) {
  if (family.size() < 2) {
    throw Error(ErrorKind::TooFewRankings, "ordering sets of eventual competitors needs r >= 2");
  }
  membership(part, family.node_count());
  if (part.canonical_sets() != eventual_competitor_sets(family).canonical_sets()) {
    throw Error(ErrorKind::PartitionMismatch,
                "sets are not the eventual competitors of this family");
  }

  const auto& reference = family[0];
  auto leads = [&](const ComponentSet& a, const ComponentSet& b) {
    return reference.precedes(a.members.front(), b.members.front());
  };

  if (verify_all_pairs) {
    for (const auto& a : part.sets) {
      for (const auto& b : part.sets) {
        if (&a == &b) continue;
        const bool expected = leads(a, b);
        for (const auto& c : family) {
          for (NodeId x : a.members) {
            for (NodeId y : b.members) {
              if (c.precedes(x, y) != expected) {
                throw Error(ErrorKind::InternalInconsistency,
                            "nodes " + std::to_string(x) + " and " + std::to_string(y) +
                                " compete across different sets");
              }
            }
          }
        }
      }
    }
  }

  ComponentPartition out = part;
  std::sort(out.sets.begin(), out.sets.end(), leads);
  for (auto& s : out.sets) s.interval = span_in(reference, s.members);
  out.ordered = true;
  return out;
}

Extremes extremes(const ComponentPartition& part) {
  if (!part.ordered || part.sets.empty()) {
    throw Error(ErrorKind::Unordered, "leader and looser need an ordered partition");
  }
  return {part.sets.front().members, part.sets.back().members};
}

ConvexityReport verify_convexity(const RankingFamily& family, const ComponentPartition& part) {
  const auto set_of = membership(part, family.node_count());
  for (std::size_t r = 0; r < family.size(); ++r) {
    const auto& c = family[r];
    for (std::size_t s = 0; s < part.sets.size(); ++s) {
      const auto span = span_in(c, part.sets[s].members);
      for (Position k = span.first + 1; k < span.last; ++k) {
        const auto x = c.at(k);
        if (set_of[x] != s) {
          return {false, ConvexityViolation{s, r, c.at(span.first), x, c.at(span.last)}};
        }
      }
    }
  }
  return {};
}

}  // namespace compgraph
