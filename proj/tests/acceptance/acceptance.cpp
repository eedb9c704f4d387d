// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// hard criterion fails. AC10 is a timing check and only warns.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "compgraph/classes.hpp"
#include "compgraph/competitivity.hpp"
#include "compgraph/components.hpp"
#include "compgraph/error.hpp"
#include "compgraph/ranking.hpp"
#include "compgraph/synthesis.hpp"
#include "oracles.hpp"

namespace {

using namespace compgraph;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;
};

class Suite {
 public:
  void run(const std::string& id, const std::string& title,
           const std::function<Outcome()>& body, bool soft = false) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = body();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.summary = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const char* verdict = outcome.pass ? "PASS" : (soft ? "WARN" : "FAIL");
    std::printf("%-5s %s  %s: %s (%.2fs)\n", id.c_str(), verdict, title.c_str(),
                outcome.summary.c_str(), seconds);
    for (const auto& note : outcome.notes) std::printf("        %s\n", note.c_str());
    std::fflush(stdout);
    if (!outcome.pass && !soft) ++failures_;
  }

  [[nodiscard]] int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

// Counts checks and keeps the first few failure descriptions.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (examples.size() < 5) examples.push_back(describe());
  }

  Outcome outcome(const std::string& what) const {
    Outcome o;
    o.pass = failures == 0;
    o.summary = std::to_string(checks) + " " + what + ", " + std::to_string(failures) + " failures";
    for (const auto& e : examples) o.notes.push_back("counterexample: " + e);
    return o;
  }
};

std::string one_line(const RankingFamily& family) {
  auto text = format_family(family);
  for (auto& ch : text)
    if (ch == '\n') ch = '|';
  return text;
}

std::string edge_text(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "n=" << g.node_count() << " {";
  for (const auto& e : g.edges()) out << ' ' << e.first << '-' << e.second;
  out << " }";
  return out.str();
}

// Criteria 2 and 5 share one family list, criteria 3 and 8 another.
std::vector<RankingFamily> families(std::size_t count, std::size_t max_n, std::size_t max_r,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  std::uniform_int_distribution<std::size_t> pick_r(1, max_r);
  std::vector<RankingFamily> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = pick_n(rng);
    const auto r = pick_r(rng);
    out.push_back(random_family(n, r, rng()));
  }
  return out;
}

Outcome ac1() {
  Tally t;
  const auto family = parse_family("1 2 3 4 5 6\n1 3 4 2 5 6\n1 2 5 3 4 6\n3 2 6 1 5 4\n");
  const std::vector<Edge> expected{{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 4},
                                   {3, 5}, {4, 5}, {4, 6}, {5, 6}};
  for (auto strategy :
       {BuildStrategy::AllPairs, BuildStrategy::Consecutive, BuildStrategy::InversionUnion}) {
    const auto g = build_graph(family, strategy);
    t.expect(g == UndirectedGraph(6, expected),
             [&] { return std::string(to_string(strategy)) + ": " + edge_text(g); });
  }
  const auto complement = complement_graph(build_graph(family));
  // The cycle 1-4-3-6-2-5-1 relabelled onto 1-2-3-4-5-6-1.
  const std::vector<NodeId> along_cycle{0, 1, 5, 3, 2, 6, 4};
  const auto relabelled = relabel_graph(complement, along_cycle);
  t.expect(relabelled == cycle_graph(6), [&] { return "complement " + edge_text(complement); });
  t.expect(oracle::components(complement).size() == 1, [] { return "complement disconnected"; });
  auto o = t.outcome("exact comparisons");
  o.notes.push_back("edges " + edge_text(build_graph(family)) + ", complement " +
                    edge_text(complement));
  return o;
}

Outcome ac2() {
  Tally t;
  for (const auto& family : families(500, 8, 5, 2024)) {
    std::vector<std::vector<NodeId>> rows;
    for (const auto& c : family) rows.emplace_back(c.order().begin(), c.order().end());
    const auto pairs = oracle::competing_pairs(rows);
    const std::vector<Edge> definition(pairs.begin(), pairs.end());
    const UndirectedGraph reference(family.node_count(), definition);
    for (auto strategy :
         {BuildStrategy::AllPairs, BuildStrategy::Consecutive, BuildStrategy::InversionUnion}) {
      t.expect(build_graph(family, strategy) == reference, [&] {
        return std::string(to_string(strategy)) + " on " + one_line(family);
      });
    }
  }
  return t.outcome("strategy/definition comparisons over 500 families");
}

Outcome ac3_and_8(bool totals) {
  Tally t;
  for (const auto& family : families(1000, 10, 6, 77)) {
    const auto n = family.node_count();
    const auto g = build_graph(family);
    const auto part = eventual_competitor_sets(family);
    if (!totals) {
      t.expect(part.canonical_sets() == oracle::components(g),
               [&] { return "partition differs on " + one_line(family); });
      t.expect(part.canonical_sets() == components_oracle(g).canonical_sets(),
               [&] { return "partition differs from traversal on " + one_line(family); });
      t.expect(verify_convexity(family, part).convex,
               [&] { return "not convex on " + one_line(family); });
      Position next = 1;
      bool blocks = true;
      for (const auto& s : part.sets) {
        blocks &= s.interval && s.interval->first == next &&
                  s.interval->length() == s.members.size();
        if (!s.interval) break;
        next = s.interval->last + 1;
        for (const auto& c : family)
          for (NodeId x : s.members)
            blocks &= c.position_of(x) >= s.interval->first && c.position_of(x) <= s.interval->last;
      }
      blocks &= next == n + 1;
      t.expect(blocks, [&] { return "interval blocks broken on " + one_line(family); });
      continue;
    }

    if (family.size() < 2) continue;
    const auto ordered = order_components(family, part, true);
    const auto k = ordered.sets.size();
    auto arrow = [&](std::size_t a, std::size_t b) {
      for (const auto& c : family)
        for (NodeId x : ordered.sets[a].members)
          for (NodeId y : ordered.sets[b].members)
            if (c.precedes(x, y)) return true;
      return false;
    };
    std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (a != b) rel[a][b] = arrow(a, b);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        t.expect(rel[a][b] != rel[b][a] && rel[a][b],
                 [&] { return "relation not total/antisymmetric/sorted on " + one_line(family); });
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c)
          if (a != b && b != c && a != c && rel[a][b] && rel[b][c])
            t.expect(rel[a][c], [&] { return "not transitive on " + one_line(family); });
    const auto ends = extremes(ordered);
    t.expect(ends.leader == part.sets.front().members && ends.looser == part.sets.back().members &&
                 part.sets.front().interval->first == 1 && part.sets.back().interval->last == n,
             [&] { return "leader/looser mismatch on " + one_line(family); });
  }
  return t.outcome(totals ? "order checks over families with r >= 2"
                          : "partition checks over 1000 families");
}

Outcome ac4() {
  Tally t;
  Outcome o;
  auto row = [&](const std::string& name, const std::function<bool(const ClassificationReport&)>& ok,
                 const std::string& expectation) {
    const auto report = classify(fixture(name).graph);
    const bool pass = ok(report);
    t.expect(pass, [&] { return name + " expected " + expectation; });
    std::ostringstream line;
    line << (pass ? "ok   " : "BAD  ") << name << ": chordal=" << report.chordal
         << " comparability=" << report.comparability << " permutation=" << report.permutation
         << " semi_cohesive=" << to_string(report.semi_cohesive.outcome)
         << " cohesive=" << to_string(report.cohesive.outcome);
    o.notes.push_back(line.str());
  };
  using R = ClassificationReport;
  row("C6", [](const R& r) { return r.comparability && r.semi_cohesive.none() && !r.chordal; },
      "comparability, no semi-cohesive order, not chordal");
  row("comp_C6", [](const R& r) { return !r.comparability; }, "not comparability");
  row("C7",
      [](const R& r) {
        return !r.chordal && !r.comparability && !r.permutation && r.semi_cohesive.none() &&
               r.cohesive.none();
      },
      "all negative");
  row("C4", [](const R& r) { return r.permutation && !r.chordal; }, "permutation, not chordal");
  row("C3", [](const R& r) { return r.permutation && r.chordal; }, "permutation and chordal");
  row("X176", [](const R& r) { return r.chordal && !r.comparability; },
      "chordal, not comparability");
  row("S3",
      [](const R& r) { return r.chordal && !r.comparability && r.semi_cohesive.none(); },
      "chordal, not comparability, no semi-cohesive order");

  const auto x = fixture("X176");
  t.expect(x.family && x.family->size() == 5 && build_graph(*x.family) == x.graph,
           [] { return std::string("printed five-ranking family does not rebuild X176"); });
  SynthesisOptions options;
  options.max_rankings = 5;
  const auto certificate = find_generating_family(x.graph, options);
  t.expect(certificate.found() && build_graph(*certificate.witness) == x.graph,
           [] { return std::string("synthesize did not certify X176 with max_r = 5"); });
  if (certificate.found()) {
    o.notes.push_back("ok   X176 certificate with " + std::to_string(certificate.witness->size()) +
                      " rankings: " + one_line(*certificate.witness));
  }
  o.notes.push_back("note S3 is taken to be the 3-sun; that row rests on this assumption");
  o.notes.push_back("note XF_2^2 is not tested: its edge set is only given as a figure");

  const auto tally = t.outcome("fixture checks");
  o.pass = tally.pass;
  o.summary = tally.summary;
  o.notes.insert(o.notes.end(), tally.notes.begin(), tally.notes.end());
  return o;
}

Outcome ac5() {
  Tally t;
  for (const auto& family : families(500, 8, 5, 2024)) {
    const auto [relabelled, map] = relabel_to_identity(family);
    const auto g = build_graph(relabelled);
    const auto identity = VertexOrder::identity(family.node_count());
    t.expect(verify_semi_cohesive(g, identity), [&] { return one_line(family); });
  }
  return t.outcome("relabelled identity orders");
}

Outcome ac7() {
  Tally t;
  std::size_t permutation_graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto catalogue = oracle::permutation_graph_masks(n);
    for (const auto& g : oracle::all_labelled_graphs(n)) {
      const auto search = find_cohesive_order(g);
      const bool permutation = is_permutation_graph(g);
      permutation_graphs += permutation;
      t.expect(!search.unknown() && search.found() == permutation,
               [&] { return "cohesive search vs recognizer on " + edge_text(g); });
      t.expect(permutation == catalogue.contains(oracle::mask_of(g)),
               [&] { return "recognizer vs inversion-graph catalogue on " + edge_text(g); });
      if (search.found()) t.expect(verify_cohesive(g, *search.witness), [&] {
        return "bad cohesive witness on " + edge_text(g);
      });
    }
  }
  auto o = t.outcome("checks over all labelled graphs with n <= 6");
  o.notes.push_back(std::to_string(permutation_graphs) + " labelled permutation graphs");
  return o;
}

// Pairs come from the criterion-5 families, the search witnesses for every
// labelled graph with n <= 6, and every semi-cohesive order when n <= 5.
Outcome ac6() {
  Tally t;
  std::size_t pairs = 0;
  auto check = [&](const UndirectedGraph& g, const VertexOrder& order) {
    ++pairs;
    t.expect(verify_semi_cohesive(g, order), [&] { return "pair is not semi-cohesive"; });
    for (const auto& e : g.edges()) {
      const auto a = order.rank_of(e.first);
      const auto b = order.rank_of(e.second);
      const auto gap = a > b ? a - b : b - a;
      t.expect(common_neighbours(g, e.first, e.second).size() + 1 >= gap,
               [&] { return "bound fails on edge of " + edge_text(g); });
    }
  };
  for (const auto& family : families(500, 8, 5, 2024)) {
    const auto relabelled = relabel_to_identity(family).first;
    check(build_graph(relabelled), VertexOrder::identity(family.node_count()));
  }
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& g : oracle::all_labelled_graphs(n)) {
      if (n <= 5) {
        for_each_semi_cohesive_order(g, [&](const VertexOrder& order) {
          check(g, order);
          return true;
        });
      } else if (const auto semi = find_semi_cohesive_order(g); semi.found()) {
        check(g, *semi.witness);
      }
    }
  auto o = t.outcome("edge checks");
  o.notes.push_back(std::to_string(pairs) + " (graph, semi-cohesive order) pairs");
  return o;
}

// The criterion covers n <= 5; n = 6 is probed as well since it is cheap.
Outcome ac9() {
  Tally t;
  SynthesisOptions options;
  options.max_rankings = 8;
  options.permutation_shortcut = false;
  Outcome o;
  for (std::size_t top : {5u, 6u}) {
    std::size_t semi = 0;
    std::size_t largest = 0;
    for (std::size_t n = top == 5 ? 1 : 6; n <= top; ++n) {
      for (const auto& g : oracle::all_labelled_graphs(n)) {
        if (!find_semi_cohesive_order(g).found()) continue;
        ++semi;
        const auto r = find_generating_family(g, options);
        t.expect(r.found() && build_graph(*r.witness) == g, [&] {
          return std::string("conjecture counterexample candidate (") +
                 std::string(to_string(r.outcome)) + "): " + edge_text(g);
        });
        if (r.found()) largest = std::max(largest, r.witness->size());
      }
    }
    o.notes.push_back(std::string(top == 5 ? "n <= 5: " : "n = 6: ") + std::to_string(semi) +
                      " labelled graphs with a semi-cohesive order, largest certificate " +
                      std::to_string(largest) + " rankings");
  }
  const auto tally = t.outcome("graphs with a semi-cohesive order synthesized");
  o.pass = tally.pass;
  o.summary = tally.summary;
  o.notes.insert(o.notes.end(), tally.notes.begin(), tally.notes.end());
  return o;
}

Outcome ac10() {
  const auto family = random_family(1000, 10, 10);
  const auto start = Clock::now();
  const auto g = build_graph(family);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  Outcome o;
  o.pass = seconds < 10.0;
  std::ostringstream s;
  s << "n = 1000, r = 10 built in " << seconds << "s with " << g.edge_count()
    << " edges (limit 10s)";
  o.summary = s.str();
  return o;
}

}  // namespace

int main() {
  Suite suite;
  suite.run("AC1", "worked example graph and its complement", ac1);
  suite.run("AC2", "build strategies agree", ac2);
  suite.run("AC3", "interval algorithm vs components", [] { return ac3_and_8(false); });
  suite.run("AC4", "fixture classification matrix", ac4);
  suite.run("AC5", "relabelled identity is semi-cohesive", ac5);
  suite.run("AC6", "common-neighbour bound", ac6);
  suite.run("AC7", "cohesive order iff permutation graph", ac7);
  suite.run("AC8", "total order between sets", [] { return ac3_and_8(true); });
  suite.run("AC9", "semi-cohesive graphs are synthesizable", ac9);
  suite.run("AC10", "build performance", ac10, /*soft=*/true);
  std::printf("%s: %d hard failure(s)\n", suite.failures() == 0 ? "ACCEPTED" : "REJECTED",
              suite.failures());
  return suite.failures() == 0 ? 0 : 1;
}
