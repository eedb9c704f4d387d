#include "compgraph/classes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "compgraph/error.hpp"

namespace compgraph {

std::string_view to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::None: return "none";
    case SearchOutcome::Unknown: return "unknown";
  }
  return "unknown";
}

// --- VertexOrder -------------------------------------------------------------

VertexOrder::VertexOrder(std::vector<NodeId> sequence) : sequence_(std::move(sequence)) {
  const auto n = sequence_.size();
  rank_.assign(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sequence_[k];
    if (x < 1 || x > n || rank_[x] != 0) {
      throw Error(ErrorKind::InvalidOrder, "not a bijection on 1.." + std::to_string(n));
    }
    rank_[x] = k + 1;
  }
}

VertexOrder VertexOrder::from_sequence(std::vector<NodeId> sequence) {
  return VertexOrder(std::move(sequence));
}

VertexOrder VertexOrder::from_ranks(std::span<const Position> rank_of) {
  if (rank_of.empty()) return VertexOrder({});
  const auto n = rank_of.size() - 1;
  std::vector<NodeId> sequence(n, 0);
  for (NodeId x = 1; x <= n; ++x) {
    const auto k = rank_of[x];
    if (k < 1 || k > n || sequence[k - 1] != 0) {
      throw Error(ErrorKind::InvalidOrder, "ranks are not a bijection on 1.." + std::to_string(n));
    }
    sequence[k - 1] = x;
  }
  return VertexOrder(std::move(sequence));
}

VertexOrder VertexOrder::identity(std::size_t n) {
  std::vector<NodeId> sequence(n);
  std::iota(sequence.begin(), sequence.end(), NodeId{1});
  return VertexOrder(std::move(sequence));
}

// --- chordal -----------------------------------------------------------------

std::vector<NodeId> lex_bfs(const UndirectedGraph& g) {
  const auto n = g.node_count();
  std::vector<NodeId> visit;
  visit.reserve(n);
  // Partition refinement: cells ordered by decreasing label, ids ascending inside.
  std::vector<NodeSet> cells;
  if (n > 0) {
    NodeSet all(n);
    std::iota(all.begin(), all.end(), NodeId{1});
    cells.push_back(std::move(all));
  }
  while (!cells.empty()) {
    const auto v = cells.front().front();
    cells.front().erase(cells.front().begin());
    if (cells.front().empty()) cells.erase(cells.begin());
    visit.push_back(v);

    std::vector<NodeSet> refined;
    refined.reserve(cells.size() * 2);
    for (auto& cell : cells) {
      NodeSet in;
      NodeSet out;
      for (NodeId x : cell) (g.has_edge(v, x) ? in : out).push_back(x);
      if (!in.empty()) refined.push_back(std::move(in));
      if (!out.empty()) refined.push_back(std::move(out));
    }
    cells = std::move(refined);
  }
  return visit;
}

bool is_perfect_elimination_order(const UndirectedGraph& g, std::span<const NodeId> order) {
  const auto n = g.node_count();
  if (order.size() != n) return false;
  std::vector<Position> index(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] < 1 || order[k] > n || index[order[k]] != 0) return false;
    index[order[k]] = k + 1;
  }
  for (NodeId v : order) {
    NodeSet later;
    for (NodeId u : g.neighbors(v)) {
      if (index[u] > index[v]) later.push_back(u);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.has_edge(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

ChordalResult is_chordal(const UndirectedGraph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_order(g, order)) return {false, std::nullopt};
  return {true, std::move(order)};
}

// --- comparability ----------------------------------------------------------

bool is_transitive_orientation(const UndirectedGraph& g, const DirectedGraph& d) {
  if (d.node_count() != g.node_count() || d.arcs().size() != g.edge_count()) return false;
  for (const auto& a : d.arcs()) {
    if (!g.has_edge(a.from, a.to) || d.has_arc(a.to, a.from)) return false;
  }
  for (const auto& first : d.arcs()) {
    for (const auto& second : d.arcs()) {
      if (first.to == second.from && first.from != second.to &&
          !d.has_arc(first.from, second.to)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Implication-class forcing. Each round orients the smallest remaining edge,
// closes it under the forcing relation of the remaining graph, and removes the
// class. A class containing both orientations of an edge rules out a
// transitive orientation.
std::optional<DirectedGraph> orient_by_forcing(const UndirectedGraph& g) {
  const auto n = g.node_count();
  auto idx = [n](NodeId u, NodeId v) { return (static_cast<std::size_t>(u) - 1) * n + (v - 1); };

  std::vector<unsigned char> remaining(n * n, 0);
  for (const auto& e : g.edges()) {
    remaining[idx(e.first, e.second)] = 1;
    remaining[idx(e.second, e.first)] = 1;
  }
  std::vector<Arc> oriented;
  std::vector<unsigned char> in_class(n * n, 0);
  std::vector<Arc> class_arcs;
  std::vector<Arc> queue;

  for (const auto& start : g.edges()) {
    if (remaining[idx(start.first, start.second)] == 0) continue;

    class_arcs.clear();
    queue.clear();
    auto force = [&](NodeId a, NodeId b) -> bool {
      if (in_class[idx(b, a)] != 0) return false;
      if (in_class[idx(a, b)] == 0) {
        in_class[idx(a, b)] = 1;
        class_arcs.push_back({a, b});
        queue.push_back({a, b});
      }
      return true;
    };
    force(start.first, start.second);

    bool contradiction = false;
    for (std::size_t head = 0; head < queue.size() && !contradiction; ++head) {
      const auto [a, b] = queue[head];
      for (NodeId c = 1; c <= n && !contradiction; ++c) {
        if (c == a || c == b) continue;
        // a->b forces a->c when a-c is an edge and b-c is not.
        if (remaining[idx(a, c)] != 0 && remaining[idx(b, c)] == 0) contradiction = !force(a, c);
        // a->b forces c->b when c-b is an edge and a-c is not.
        if (!contradiction && remaining[idx(c, b)] != 0 && remaining[idx(a, c)] == 0) {
          contradiction = !force(c, b);
        }
      }
    }
    for (const auto& arc : class_arcs) in_class[idx(arc.from, arc.to)] = 0;
    if (contradiction) return std::nullopt;

    for (const auto& arc : class_arcs) {
      remaining[idx(arc.from, arc.to)] = 0;
      remaining[idx(arc.to, arc.from)] = 0;
      oriented.push_back(arc);
    }
  }
  return DirectedGraph(n, oriented);
}

class OrientationSearch {
 public:
  OrientationSearch(const UndirectedGraph& g, std::size_t budget)
      : g_(g), n_(g.node_count()), budget_(budget), dir_(n_ * n_, 0) {}

  SearchStatus<DirectedGraph> run() {
    SearchStatus<DirectedGraph> status;
    status.bound = budget_;
    const auto ok = assign(0);
    if (exhausted_) {
      status.outcome = SearchOutcome::Unknown;
    } else if (ok) {
      std::vector<Arc> arcs;
      for (const auto& e : g_.edges()) {
        arcs.push_back(dir_[idx(e.first, e.second)] != 0 ? Arc{e.first, e.second}
                                                          : Arc{e.second, e.first});
      }
      status.outcome = SearchOutcome::Found;
      status.witness = DirectedGraph(n_, arcs);
    } else {
      status.outcome = SearchOutcome::None;
    }
    return status;
  }

 private:
  [[nodiscard]] std::size_t idx(NodeId u, NodeId v) const {
    return (static_cast<std::size_t>(u) - 1) * n_ + (v - 1);
  }
  [[nodiscard]] bool arc(NodeId u, NodeId v) const { return dir_[idx(u, v)] != 0; }

  // Consistency of the new arc u->v with every arc already placed.
  [[nodiscard]] bool consistent(NodeId u, NodeId v) const {
    for (NodeId w = 1; w <= n_; ++w) {
      if (w == u || w == v) continue;
      // w->u->v needs w->v
      if (arc(w, u) && (!g_.has_edge(w, v) || arc(v, w))) return false;
      // u->v->w needs u->w
      if (arc(v, w) && (!g_.has_edge(u, w) || arc(w, u))) return false;
    }
    return true;
  }

  bool assign(std::size_t k) {
    if (++steps_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const auto edges = g_.edges();
    if (k == edges.size()) return true;
    const auto [a, b] = edges[k];
    for (const auto& [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      if (!consistent(u, v)) continue;
      dir_[idx(u, v)] = 1;
      if (assign(k + 1)) return true;
      dir_[idx(u, v)] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const UndirectedGraph& g_;
  std::size_t n_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
  std::vector<unsigned char> dir_;
};

}  // namespace

SearchStatus<DirectedGraph> exhaustive_transitive_orientation(const UndirectedGraph& g,
                                                              std::size_t step_budget) {
  auto status = OrientationSearch(g, step_budget).run();
  if (status.found() && !is_transitive_orientation(g, *status.witness)) {
    throw Error(ErrorKind::InternalInconsistency, "exhaustive search returned a bad orientation");
  }
  return status;
}

SearchStatus<DirectedGraph> transitive_orientation(const UndirectedGraph& g,
                                                   std::size_t cross_check_nodes) {
  SearchStatus<DirectedGraph> status;
  status.bound = cross_check_nodes;
  if (auto oriented = orient_by_forcing(g)) {
    if (!is_transitive_orientation(g, *oriented)) {
      throw Error(ErrorKind::InternalInconsistency, "forcing produced a non-transitive orientation");
    }
    status.outcome = SearchOutcome::Found;
    status.witness = std::move(oriented);
  } else {
    status.outcome = SearchOutcome::None;
  }

  if (g.node_count() <= cross_check_nodes) {
    const auto check = exhaustive_transitive_orientation(g);
    if (!check.unknown() && check.outcome != status.outcome) {
      throw Error(ErrorKind::InternalInconsistency,
                  "forcing and exhaustive orientation search disagree");
    }
  }
  return status;
}

bool is_comparability(const UndirectedGraph& g) { return transitive_orientation(g).found(); }

bool is_permutation_graph(const UndirectedGraph& g) {
  return is_comparability(g) && is_comparability(complement_graph(g));
}

// --- vertex orders ----------------------------------------------------------

namespace {

void check_order(const UndirectedGraph& g, const VertexOrder& order) {
  if (order.size() != g.node_count()) {
    throw Error(ErrorKind::InvalidOrder, "order covers " + std::to_string(order.size()) +
                                             " nodes, graph has " +
                                             std::to_string(g.node_count()));
  }
}

// Left-to-right placement with pruning. Every edge {a,b} is checked in full
// when its later endpoint is placed, since all nodes ranked between them are
// placed by then; partial prefixes are also cut as soon as a placed node x
// after a is linked neither to a nor to an unplaced neighbour b of a.
class OrderSearch {
 public:
  OrderSearch(const UndirectedGraph& g, bool cohesive)
      : g_(g), n_(g.node_count()), cohesive_(cohesive), rank_(n_ + 1, 0) {
    common_.assign((n_ + 1) * (n_ + 1), 0);
    for (const auto& e : g.edges()) {
      const auto count = common_neighbours(g, e.first, e.second).size();
      common_[e.first * (n_ + 1) + e.second] = count;
      common_[e.second * (n_ + 1) + e.first] = count;
    }
  }

  // Calls visit on each complete order; stops when it returns false.
  bool run(const std::function<bool(const VertexOrder&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    extend();
    return !stopped_;
  }

 private:
  [[nodiscard]] bool edge(NodeId u, NodeId v) const { return g_.has_edge(u, v); }

  [[nodiscard]] bool can_place(NodeId v) const {
    const auto position = sequence_.size() + 1;
    for (std::size_t ka = 0; ka < sequence_.size(); ++ka) {
      const auto a = sequence_[ka];
      if (edge(a, v)) {
        // Condition (i) for the edge {a, v}: every node between them.
        for (std::size_t kx = ka + 1; kx < sequence_.size(); ++kx) {
          const auto x = sequence_[kx];
          if (!edge(x, a) && !edge(x, v)) return false;
        }
      }
      // v sits between a and each unplaced neighbour b of a.
      for (NodeId b : g_.neighbors(a)) {
        if (b == v || rank_[b] != 0) continue;
        if (!edge(v, a) && !edge(v, b)) return false;
        // Common-neighbour bound: b lands at least one past v.
        if (position + 1 - (ka + 1) - 1 > common_[a * (n_ + 1) + b]) return false;
      }
    }
    if (cohesive_) {
      // Links a-x and x-v with a before x force a-v.
      for (std::size_t kx = 0; kx < sequence_.size(); ++kx) {
        const auto x = sequence_[kx];
        if (!edge(x, v)) continue;
        for (std::size_t ka = 0; ka < kx; ++ka) {
          const auto a = sequence_[ka];
          if (edge(a, x) && !edge(a, v)) return false;
        }
      }
    }
    return true;
  }

  void extend() {
    if (sequence_.size() == n_) {
      if (!(*visit_)(VertexOrder::from_sequence(sequence_))) stopped_ = true;
      return;
    }
    for (NodeId v = 1; v <= n_ && !stopped_; ++v) {
      if (rank_[v] != 0 || !can_place(v)) continue;
      sequence_.push_back(v);
      rank_[v] = sequence_.size();
      extend();
      rank_[v] = 0;
      sequence_.pop_back();
    }
  }

  const UndirectedGraph& g_;
  std::size_t n_;
  bool cohesive_;
  std::vector<NodeId> sequence_;
  std::vector<Position> rank_;
  std::vector<std::size_t> common_;
  const std::function<bool(const VertexOrder&)>* visit_ = nullptr;
  bool stopped_ = false;
};

SearchStatus<VertexOrder> first_order(const UndirectedGraph& g, std::size_t max_nodes,
                                      bool cohesive) {
  SearchStatus<VertexOrder> status;
  status.bound = max_nodes;
  if (g.node_count() > max_nodes) {
    status.outcome = SearchOutcome::Unknown;
    return status;
  }
  OrderSearch search(g, cohesive);
  search.run([&](const VertexOrder& order) {
    status.witness = order;
    return false;
  });
  status.outcome = status.witness ? SearchOutcome::Found : SearchOutcome::None;
  return status;
}

}  // namespace

bool verify_semi_cohesive(const UndirectedGraph& g, const VertexOrder& order) {
  check_order(g, order);
  for (const auto& e : g.edges()) {
    auto lo = order.rank_of(e.first);
    auto hi = order.rank_of(e.second);
    if (lo > hi) std::swap(lo, hi);
    const auto a = order.at(lo);
    const auto b = order.at(hi);
    for (Position k = lo + 1; k < hi; ++k) {
      const auto x = order.at(k);
      if (!g.has_edge(a, x) && !g.has_edge(x, b)) return false;
    }
  }
  return true;
}

bool verify_cohesive(const UndirectedGraph& g, const VertexOrder& order) {
  if (!verify_semi_cohesive(g, order)) return false;
  const auto n = g.node_count();
  for (Position kx = 1; kx <= n; ++kx) {
    const auto x = order.at(kx);
    for (NodeId a : g.neighbors(x)) {
      if (order.rank_of(a) >= kx) continue;
      for (NodeId b : g.neighbors(x)) {
        if (order.rank_of(b) > kx && !g.has_edge(a, b)) return false;
      }
    }
  }
  return true;
}

SearchStatus<VertexOrder> find_semi_cohesive_order(const UndirectedGraph& g,
                                                   std::size_t max_nodes) {
  return first_order(g, max_nodes, false);
}

SearchStatus<VertexOrder> find_cohesive_order(const UndirectedGraph& g, std::size_t max_nodes) {
  return first_order(g, max_nodes, true);
}

bool for_each_semi_cohesive_order(const UndirectedGraph& g,
                                  const std::function<bool(const VertexOrder&)>& visit) {
  return OrderSearch(g, false).run(visit);
}

NodeSet common_neighbours(const UndirectedGraph& g, NodeId i, NodeId j) {
  g.check_node(i);
  g.check_node(j);
  if (i == j) throw Error(ErrorKind::SameNode, "node " + std::to_string(i));
  NodeSet out;
  const auto ni = g.neighbors(i);
  const auto nj = g.neighbors(j);
  std::set_union(ni.begin(), ni.end(), nj.begin(), nj.end(), std::back_inserter(out));
  std::erase_if(out, [&](NodeId x) { return x == i || x == j; });
  return out;
}

// --- classification ---------------------------------------------------------

ClassificationReport classify(const UndirectedGraph& g, std::size_t max_nodes) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::InternalInconsistency, what);
  };

  ClassificationReport report;
  auto chordal = is_chordal(g);
  report.chordal = chordal.chordal;
  report.elimination_order = std::move(chordal.elimination_order);
  if (report.elimination_order && !is_perfect_elimination_order(g, *report.elimination_order)) {
    fail("elimination order failed re-verification");
  }

  auto orientation = transitive_orientation(g);
  report.comparability = orientation.found();
  report.orientation = std::move(orientation.witness);
  if (report.comparability) {
    auto co = transitive_orientation(complement_graph(g));
    report.permutation = co.found();
    report.complement_orientation = std::move(co.witness);
  }

  report.semi_cohesive = find_semi_cohesive_order(g, max_nodes);
  report.cohesive = find_cohesive_order(g, max_nodes);

  if (report.semi_cohesive.found() && !verify_semi_cohesive(g, *report.semi_cohesive.witness)) {
    fail("semi-cohesive witness failed re-verification");
  }
  if (report.cohesive.found() && !verify_cohesive(g, *report.cohesive.witness)) {
    fail("cohesive witness failed re-verification");
  }
  if (report.cohesive.found() && !report.permutation) {
    fail("cohesive order found for a graph that is not a permutation graph");
  }
  if (report.cohesive.none() && report.permutation) {
    fail("permutation graph without a cohesive order");
  }
  if (report.cohesive.found() && report.semi_cohesive.none()) {
    fail("cohesive order found but no semi-cohesive order");
  }
  if (report.permutation && report.semi_cohesive.none()) {
    fail("permutation graph without a semi-cohesive order");
  }
  return report;
}

}  // namespace compgraph
