#include "compgraph/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <string>

#include "compgraph/competitivity.hpp"
#include "compgraph/error.hpp"

namespace compgraph {

UndirectedGraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidSize, "a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (NodeId k = 1; k < n; ++k) edges.push_back({k, k + 1});
  edges.push_back({1, static_cast<NodeId>(n)});
  return UndirectedGraph(n, edges);
}

UndirectedGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return UndirectedGraph(n, edges);
}

UndirectedGraph edgeless_graph(std::size_t n) { return UndirectedGraph(n); }

UndirectedGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId k = 1; k < n; ++k) edges.push_back({k, k + 1});
  return UndirectedGraph(n, edges);
}

namespace {

RankingFamily family_of(std::initializer_list<std::vector<NodeId>> rows) {
  std::vector<Ranking> rankings;
  for (const auto& row : rows) rankings.emplace_back(row);
  return RankingFamily(std::move(rankings));
}

// "cycle(7)" -> 7 when `name` has the form prefix(N).
std::optional<std::size_t> parameter_of(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || name.size() < prefix.size() + 3) return std::nullopt;
  if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
  const auto digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"C3", "C4", "C5", "C6", "C7", "C9", "P3", "S3", "comp_C6", "X176"};
}

Fixture fixture(std::string_view name) {
  const std::string key(name);
  if (key == "C3") {
    auto family = family_of({{1, 2, 3}, {3, 2, 1}});
    return {key, cycle_graph(3), std::move(family)};
  }
  if (key == "C4" || key == "C5" || key == "C6" || key == "C7" || key == "C9") {
    return {key, cycle_graph(static_cast<std::size_t>(key[1] - '0')), std::nullopt};
  }
  if (key == "P3") return {key, path_graph(3), std::nullopt};
  if (key == "S3") {
    // 3-sun: triangle 1-2-3 with an ear on each side.
    const std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4},
                                  {2, 5}, {3, 5}, {1, 6}, {3, 6}};
    return {key, UndirectedGraph(6, edges), std::nullopt};
  }
  if (key == "comp_C6") {
    auto family = family_of(
        {{1, 2, 3, 4, 5, 6}, {1, 3, 4, 2, 5, 6}, {1, 2, 5, 3, 4, 6}, {3, 2, 6, 1, 5, 4}});
    auto graph = build_graph(family);
    return {key, std::move(graph), std::move(family)};
  }
  if (key == "X176") {
    auto family = family_of({{1, 2, 3, 4, 5, 6, 7},
                             {2, 1, 4, 3, 6, 5, 7},
                             {1, 2, 5, 4, 3, 7, 6},
                             {1, 4, 2, 3, 5, 6, 7},
                             {1, 3, 2, 6, 4, 5, 7}});
    auto graph = build_graph(family);
    return {key, std::move(graph), std::move(family)};
  }
  if (auto n = parameter_of(name, "cycle")) return {key, cycle_graph(*n), std::nullopt};
  if (auto n = parameter_of(name, "complete"); n && *n >= 1) {
    return {key, complete_graph(*n), std::nullopt};
  }
  if (auto n = parameter_of(name, "edgeless"); n && *n >= 1) {
    return {key, edgeless_graph(*n), std::nullopt};
  }
  throw Error(ErrorKind::UnknownFixture, "'" + key + "'");
}

namespace {

// Bit set over the edge indices of one graph.
class EdgeMask {
 public:
  explicit EdgeMask(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  [[nodiscard]] bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }

  [[nodiscard]] std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  [[nodiscard]] bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  [[nodiscard]] bool subset_of(const EdgeMask& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    }
    return true;
  }
  [[nodiscard]] std::size_t overlap(const EdgeMask& other) const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      total += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    }
    return total;
  }
  [[nodiscard]] EdgeMask minus(const EdgeMask& other) const {
    EdgeMask out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= ~other.words_[k];
    return out;
  }
  [[nodiscard]] std::size_t first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return words_.size() * 64;
  }

  friend bool operator==(const EdgeMask&, const EdgeMask&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct Candidate {
  std::vector<NodeId> order;  // permutation of 1..n, labels of the relabelled graph
  EdgeMask inversions;
};

// Finds generating families whose first ranking is the identity on a graph
// already relabelled along a semi-cohesive order.
class LabelledSynthesis {
 public:
  LabelledSynthesis(const UndirectedGraph& h, std::size_t max_extra, std::size_t budget)
      : h_(h), n_(h.node_count()), max_extra_(max_extra), budget_(budget),
        edge_index_((n_ + 1) * (n_ + 1), 0) {
    const auto edges = h.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      edge_index_[edges[k].first * (n_ + 1) + edges[k].second] = k;
      edge_index_[edges[k].second * (n_ + 1) + edges[k].first] = k;
    }
  }

  [[nodiscard]] bool exhausted() const noexcept { return exhausted_; }

  /// Permutations (beyond the identity) whose inversions cover every edge.
  std::optional<std::vector<std::vector<NodeId>>> solve() {
    EdgeMask all(h_.edge_count());
    for (std::size_t k = 0; k < h_.edge_count(); ++k) all.set(k);
    if (all.empty()) return std::vector<std::vector<NodeId>>{};

    enumerate_admissible();
    if (exhausted_) return std::nullopt;
    keep_maximal();

    std::vector<std::size_t> chosen;
    if (!cover(all, chosen)) return std::nullopt;
    std::vector<std::vector<NodeId>> out;
    for (auto k : chosen) out.push_back(candidates_[k].order);
    return out;
  }

 private:
  bool tick() {
    if (++steps_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  // Depth-first over positions: placing v after a larger u inverts {v,u},
  // which must be an edge.
  void enumerate_admissible() {
    std::vector<NodeId> prefix;
    std::vector<bool> used(n_ + 1, false);
    EdgeMask mask(h_.edge_count());
    place(prefix, used, mask);
  }

  void place(std::vector<NodeId>& prefix, std::vector<bool>& used, const EdgeMask& mask) {
    if (!tick()) return;
    if (prefix.size() == n_) {
      if (!mask.empty()) candidates_.push_back({prefix, mask});
      return;
    }
    for (NodeId v = 1; v <= n_ && !exhausted_; ++v) {
      if (used[v]) continue;
      EdgeMask next = mask;
      bool admissible = true;
      for (NodeId u = v + 1; u <= n_; ++u) {
        if (!used[u]) continue;
        if (!h_.has_edge(u, v)) {
          admissible = false;
          break;
        }
        next.set(edge_index_[u * (n_ + 1) + v]);
      }
      if (!admissible) continue;
      used[v] = true;
      prefix.push_back(v);
      place(prefix, used, next);
      prefix.pop_back();
      used[v] = false;
    }
  }

  // Drops candidates whose inversion set is contained in another's.
  void keep_maximal() {
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.inversions.count() > b.inversions.count();
                     });
    std::vector<Candidate> kept;
    for (auto& c : candidates_) {
      const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Candidate& k) {
        return c.inversions.subset_of(k.inversions);
      });
      if (!dominated) kept.push_back(std::move(c));
    }
    candidates_ = std::move(kept);
  }

  // Exact set cover with at most max_extra_ sets: branch on the uncovered edge
  // with the fewest candidates, larger contributions first.
  bool cover(const EdgeMask& uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered.empty()) return true;
    if (chosen.size() == max_extra_ || !tick()) return false;

    std::size_t widest = 0;
    for (const auto& c : candidates_) widest = std::max(widest, c.inversions.overlap(uncovered));
    if (widest == 0 || (max_extra_ - chosen.size()) * widest < uncovered.count()) return false;

    std::size_t pivot_edge = uncovered.first_set();
    std::size_t fewest = candidates_.size() + 1;
    for (std::size_t e = 0; e < h_.edge_count(); ++e) {
      if (!uncovered.test(e)) continue;
      const auto holders = static_cast<std::size_t>(std::count_if(
          candidates_.begin(), candidates_.end(),
          [&](const Candidate& c) { return c.inversions.test(e); }));
      if (holders < fewest) {
        fewest = holders;
        pivot_edge = e;
      }
    }
    if (fewest == 0) return false;

    std::vector<std::size_t> options;
    for (std::size_t k = 0; k < candidates_.size(); ++k) {
      if (candidates_[k].inversions.test(pivot_edge)) options.push_back(k);
    }
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return candidates_[a].inversions.overlap(uncovered) >
             candidates_[b].inversions.overlap(uncovered);
    });
    for (auto k : options) {
      chosen.push_back(k);
      if (cover(uncovered.minus(candidates_[k].inversions), chosen)) return true;
      chosen.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const UndirectedGraph& h_;
  std::size_t n_;
  std::size_t max_extra_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> edge_index_;
  std::vector<Candidate> candidates_;
};

// Linear order from a transitive tournament: more out-arcs means earlier.
std::vector<NodeId> linear_order(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<std::size_t> out_degree(n + 1, 0);
  for (const auto& a : arcs) ++out_degree[a.from];
  std::vector<NodeId> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = static_cast<NodeId>(k + 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return out_degree[a] > out_degree[b]; });
  return order;
}

// Two rankings realising a permutation graph: with T orienting g and F its
// complement, F+T and F+T^-1 are linear orders disagreeing exactly on g's edges.
std::optional<RankingFamily> permutation_realiser(const UndirectedGraph& g) {
  const auto orientation = transitive_orientation(g);
  if (!orientation.found()) return std::nullopt;
  const auto co = transitive_orientation(complement_graph(g));
  if (!co.found()) return std::nullopt;

  std::vector<Arc> forward(co.witness->arcs().begin(), co.witness->arcs().end());
  std::vector<Arc> backward = forward;
  for (const auto& a : orientation.witness->arcs()) {
    forward.push_back(a);
    backward.push_back({a.to, a.from});
  }
  const auto n = g.node_count();
  return RankingFamily({Ranking(linear_order(n, forward)), Ranking(linear_order(n, backward))});
}

}  // namespace

SearchStatus<RankingFamily> find_generating_family(const UndirectedGraph& g,
                                                   const SynthesisOptions& options) {
  if (options.max_rankings < 2) {
    throw Error(ErrorKind::InvalidSize, "a certificate may use at least two rankings");
  }
  if (g.node_count() == 0) throw Error(ErrorKind::InvalidGraph, "graph has no nodes");

  SearchStatus<RankingFamily> status;
  status.bound = options.max_nodes;
  if (g.node_count() > options.max_nodes) return status;

  auto certify = [&](RankingFamily family) {
    if (build_graph(family) != g) {
      throw Error(ErrorKind::InternalInconsistency, "certificate does not rebuild the graph");
    }
    status.outcome = SearchOutcome::Found;
    status.witness = std::move(family);
    return status;
  };

  if (options.permutation_shortcut) {
    if (auto family = permutation_realiser(g)) return certify(std::move(*family));
  }

  // Every generating family, relabelled so its first ranking is the identity,
  // makes the identity a semi-cohesive order; so no such order means no family.
  const auto first = find_semi_cohesive_order(g, options.max_nodes);
  if (first.none()) {
    status.outcome = SearchOutcome::None;
    return status;
  }

  bool inconclusive = false;
  std::optional<RankingFamily> found;
  for_each_semi_cohesive_order(g, [&](const VertexOrder& order) {
    std::vector<NodeId> rename(g.node_count() + 1, 0);
    for (NodeId x = 1; x <= g.node_count(); ++x) rename[x] = static_cast<NodeId>(order.rank_of(x));
    const auto relabelled = relabel_graph(g, rename);

    LabelledSynthesis search(relabelled, options.max_rankings - 1, options.step_budget);
    auto extra = search.solve();
    if (search.exhausted()) {
      inconclusive = true;
      return true;
    }
    if (!extra) return true;

    const auto sequence = order.sequence();
    std::vector<Ranking> rankings;
    rankings.emplace_back(std::vector<NodeId>(sequence.begin(), sequence.end()));
    for (const auto& labels : *extra) {
      std::vector<NodeId> original;
      original.reserve(labels.size());
      for (NodeId label : labels) original.push_back(order.at(label));
      rankings.emplace_back(std::move(original));
    }
    found = RankingFamily(std::move(rankings));
    return false;
  });

  if (found) return certify(std::move(*found));
  status.outcome = inconclusive ? SearchOutcome::Unknown : SearchOutcome::None;
  return status;
}

}  // namespace compgraph
