#include "selfcheck.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "compgraph/classes.hpp"
#include "compgraph/competitivity.hpp"
#include "compgraph/components.hpp"
#include "compgraph/error.hpp"
#include "compgraph/ranking.hpp"
#include "compgraph/synthesis.hpp"

namespace compgraph::cli {

namespace {

class Checker {
 public:
  explicit Checker(SelfcheckResult& result) : result_(result) {}

  void expect(bool condition, const std::string& family_text, const std::string& what) {
    ++result_.checks;
    if (!condition) result_.violations.push_back(what + " on family:\n" + family_text);
  }

 private:
  SelfcheckResult& result_;
};

void check_rankings(const RankingFamily& family, const std::string& text, Checker& check) {
  const auto n = static_cast<NodeId>(family.node_count());
  for (const auto& c : family) {
    bool round_trip = true;
    for (Position k = 1; k <= n; ++k) round_trip &= c.position_of(c.at(k)) == k;
    check.expect(round_trip, text, "position/order round trip");
  }
  const auto& c = family[0];
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      check.expect(c.precedes(i, j) != c.precedes(j, i), text, "precedence antisymmetry");
      check.expect(compete(family, i, j) == compete(family, j, i), text, "compete symmetry");
    }
  }
  std::vector<NodeId> reversed(n);
  for (NodeId k = 0; k < n; ++k) reversed[k] = n - k;
  check.expect(inversions(Ranking(reversed)).size() == n * (n - 1) / 2, text,
               "inversions of the full reversal");
  check.expect(inversions(Ranking::identity(n)).empty(), text, "identity has no inversions");

  const auto [relabelled, map] = relabel_to_identity(family);
  check.expect(relabelled[0].is_identity(), text, "relabel makes the first ranking the identity");
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      check.expect(compete(relabelled, map.to_new(i), map.to_new(j)) == compete(family, i, j),
                   text, "relabel preserves competition");
    }
  }
}

void check_graph(const RankingFamily& family, const UndirectedGraph& g, const std::string& text,
                 Checker& check) {
  const auto n = static_cast<NodeId>(family.node_count());
  check.expect(build_graph(family, BuildStrategy::AllPairs) == g, text,
               "all-pairs strategy matches inversion-union");
  check.expect(build_graph(family, BuildStrategy::Consecutive) == g, text,
               "consecutive strategy matches inversion-union");

  if (family.size() >= 2) {
    const auto d = build_directed_graph(family);
    for (NodeId i = 1; i <= n; ++i) {
      for (NodeId j = i + 1; j <= n; ++j) {
        check.expect(g.has_edge(i, j) == (d.has_arc(i, j) && d.has_arc(j, i)), text,
                     "competitivity graph equals two-way arcs of the precedence digraph");
      }
    }
  }

  for (const auto& clique : sets_of_competitors(g)) {
    NodeSet meet = competitivity_set(g, clique.front());
    for (NodeId x : clique) {
      const auto cx = competitivity_set(g, x);
      NodeSet next;
      std::set_intersection(meet.begin(), meet.end(), cx.begin(), cx.end(),
                            std::back_inserter(next));
      meet = std::move(next);
    }
    check.expect(meet == clique, text, "set of competitors equals intersection of its C(i)");
  }

  const auto [relabelled, map] = relabel_to_identity(family);
  const auto h = build_graph(relabelled);
  const auto identity = VertexOrder::identity(n);
  const bool semi = verify_semi_cohesive(h, identity);
  check.expect(semi, text, "identity order is semi-cohesive after relabelling");
  if (semi) {
    for (const auto& e : h.edges()) {
      check.expect(common_neighbours(h, e.first, e.second).size() + 1 >= e.second - e.first, text,
                   "common-neighbour bound on a semi-cohesive order");
    }
  }

  if (family.size() == 2) {
    check.expect(is_comparability(g), text, "two rankings give a comparability graph");
  }
  if (n <= 7) {
    const bool permutation = is_permutation_graph(g);
    const auto cohesive = find_cohesive_order(g);
    check.expect(cohesive.found() == permutation, text,
                 "cohesive order exists iff permutation graph");
    if (is_comparability(g)) {
      check.expect(cohesive.found(), text, "comparability competitivity graph has a cohesive order");
    }
  }
}

void check_components(const RankingFamily& family, const UndirectedGraph& g,
                      const std::string& text, Checker& check) {
  const auto n = family.node_count();
  const auto part = eventual_competitor_sets(family);
  check.expect(part.canonical_sets() == components_oracle(g).canonical_sets(), text,
               "interval algorithm matches connected components");
  check.expect(verify_convexity(family, part).convex, text, "sets are convex in every ranking");

  for (const auto& s : part.sets) {
    for (const auto& c : family) {
      Position lo = n + 1;
      Position hi = 0;
      for (NodeId x : s.members) {
        lo = std::min(lo, c.position_of(x));
        hi = std::max(hi, c.position_of(x));
      }
      check.expect(s.interval && lo == s.interval->first && hi == s.interval->last, text,
                   "set occupies its recorded interval in every ranking");
    }
  }

  const auto& first_set = part.sets.front().members;
  for (const auto& c : family) {
    check.expect(std::binary_search(first_set.begin(), first_set.end(), c.at(1)), text,
                 "every first-placed node is in the leading set");
  }

  if (family.size() < 2) return;
  const auto ordered = order_components(family, part, true);
  auto leads = [&](const NodeSet& a, const NodeSet& b) {
    for (const auto& c : family) {
      for (NodeId x : a) {
        for (NodeId y : b) {
          if (c.precedes(x, y)) return true;
        }
      }
    }
    return false;
  };
  const auto k = ordered.sets.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const bool forward = leads(ordered.sets[i].members, ordered.sets[j].members);
      check.expect(forward != leads(ordered.sets[j].members, ordered.sets[i].members), text,
                   "component relation is total and antisymmetric");
      check.expect(forward == (i < j), text, "component order follows the relation");
    }
  }
  const auto ends = extremes(ordered);
  check.expect(ends.leader == part.sets.front().members &&
                   ends.looser == part.sets.back().members,
               text, "leader and looser are the first and last intervals");
}

void check_synthesis(const RankingFamily& family, const UndirectedGraph& g,
                     const std::string& text, Checker& check) {
  SynthesisOptions options;
  options.max_rankings = std::max<std::size_t>(2, family.size());
  const auto status = find_generating_family(g, options);
  check.expect(!status.none(), text, "a competitivity graph must admit a generating family");
  if (status.found()) {
    check.expect(build_graph(*status.witness) == g, text, "certificate rebuilds the graph");
  }
}

}  // namespace

SelfcheckResult run_selfcheck(const SelfcheckOptions& options, std::ostream& log) {
  SelfcheckResult result;
  Checker check(result);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick_n(1, std::max<std::size_t>(1, options.max_n));
  std::uniform_int_distribution<std::size_t> pick_r(1, std::max<std::size_t>(1, options.max_r));

  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto n = pick_n(rng);
    const auto r = pick_r(rng);
    const auto family = random_family(n, r, rng());
    const auto text = format_family(family);
    try {
      const auto g = build_graph(family);
      check_rankings(family, text, check);
      check_graph(family, g, text, check);
      check_components(family, g, text, check);
      if (n <= 7) check_synthesis(family, g, text, check);
    } catch (const Error& e) {
      check.expect(false, text, std::string("unexpected error: ") + e.what());
    }
  }
  log << "selfcheck: " << options.trials << " families, " << result.checks << " checks, "
      << result.violations.size() << " violations\n";
  for (const auto& v : result.violations) log << "VIOLATION: " << v;
  return result;
}

}  // namespace compgraph::cli
