#include <gtest/gtest.h>

#include "compgraph/classes.hpp"
#include "compgraph/competitivity.hpp"
#include "compgraph/error.hpp"
#include "compgraph/synthesis.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace compgraph {
namespace {

using test::edges_of;
using test::family_of;
using test::kExampleEdges;
using test::kind_of;

TEST(GraphBuilders, Shapes) {
  EXPECT_EQ(edges_of(cycle_graph(4)), (std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(edgeless_graph(5).edge_count(), 0u);
  EXPECT_EQ(edges_of(path_graph(3)), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(kind_of([] { (void)cycle_graph(2); }), ErrorKind::InvalidSize);
}

TEST(Fixture, X176EdgesFromPrintedFamily) {
  const auto x = fixture("X176");
  ASSERT_TRUE(x.family.has_value());
  EXPECT_EQ(x.family->size(), 5u);
  // Frozen from the definition-level oracle on the five rankings.
  const std::vector<Edge> expected{{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5},
                                   {4, 5}, {4, 6}, {5, 6}, {6, 7}};
  EXPECT_EQ(edges_of(x.graph), expected);
  std::vector<std::vector<NodeId>> rows;
  for (const auto& c : *x.family) rows.emplace_back(c.order().begin(), c.order().end());
  const auto pairs = oracle::competing_pairs(rows);
  EXPECT_EQ(std::vector<Edge>(pairs.begin(), pairs.end()), expected);
}

TEST(Fixture, C3AndCompC6) {
  const auto c3 = fixture("C3");
  EXPECT_EQ(c3.family, family_of({{1, 2, 3}, {3, 2, 1}}));
  EXPECT_EQ(c3.graph, complete_graph(3));

  const auto comp = fixture("comp_C6");
  EXPECT_EQ(edges_of(comp.graph), kExampleEdges);
  EXPECT_EQ(edges_of(complement_graph(comp.graph)),
            (std::vector<Edge>{{1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 4}, {3, 6}}));
}

TEST(Fixture, PrintedFamiliesRebuildTheirGraphs) {
  for (const auto& name : fixture_names()) {
    const auto f = fixture(name);
    EXPECT_EQ(f.name, name);
    if (f.family) {
      EXPECT_EQ(build_graph(*f.family), f.graph) << name;
    }
  }
}

TEST(Fixture, Names) {
  EXPECT_EQ(fixture("S3").graph.edge_count(), 9u);
  EXPECT_EQ(fixture("cycle(8)").graph, cycle_graph(8));
  EXPECT_EQ(fixture("complete(4)").graph, complete_graph(4));
  EXPECT_EQ(fixture("edgeless(2)").graph, edgeless_graph(2));
  EXPECT_EQ(fixture("C9").graph, cycle_graph(9));
  EXPECT_EQ(kind_of([] { (void)fixture("XF22"); }), ErrorKind::UnknownFixture);
  EXPECT_EQ(kind_of([] { (void)fixture("cycle(x)"); }), ErrorKind::UnknownFixture);
}

TEST(FindGeneratingFamily, CompleteGraph) {
  SynthesisOptions options;
  options.max_rankings = 2;
  const auto r = find_generating_family(complete_graph(3), options);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.witness, family_of({{1, 2, 3}, {3, 2, 1}}));
}

TEST(FindGeneratingFamily, X176WithinFiveRankings) {
  SynthesisOptions options;
  options.max_rankings = 5;
  const auto x = fixture("X176");
  const auto r = find_generating_family(x.graph, options);
  ASSERT_TRUE(r.found());
  EXPECT_LE(r.witness->size(), 5u);
  EXPECT_EQ(build_graph(*r.witness), x.graph);
}

TEST(FindGeneratingFamily, NoFamilyWithoutSemiCohesiveOrder) {
  for (std::size_t max_r : {2u, 4u, 8u}) {
    SynthesisOptions options;
    options.max_rankings = max_r;
    EXPECT_TRUE(find_generating_family(fixture("C5").graph, options).none());
  }
  EXPECT_TRUE(find_generating_family(fixture("C6").graph).none());
  EXPECT_TRUE(find_generating_family(fixture("S3").graph).none());
}

TEST(FindGeneratingFamily, RankingLimitMatters) {
  // comp_C6 is not a permutation graph, so two rankings cannot produce it.
  SynthesisOptions options;
  options.max_rankings = 2;
  EXPECT_TRUE(find_generating_family(fixture("comp_C6").graph, options).none());
  options.max_rankings = 4;
  const auto r = find_generating_family(fixture("comp_C6").graph, options);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(build_graph(*r.witness), fixture("comp_C6").graph);
}

TEST(FindGeneratingFamily, BoundsAndErrors) {
  SynthesisOptions small;
  small.max_nodes = 5;
  EXPECT_TRUE(find_generating_family(fixture("X176").graph, small).unknown());
  SynthesisOptions one;
  one.max_rankings = 1;
  EXPECT_EQ(kind_of([&] { (void)find_generating_family(complete_graph(3), one); }),
            ErrorKind::InvalidSize);
  EXPECT_EQ(kind_of([] { (void)find_generating_family(UndirectedGraph(0)); }),
            ErrorKind::InvalidGraph);
}

TEST(FindGeneratingFamily, ShortcutAndGeneralPathAgree) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto fam = random_family(2 + seed % 6, 2 + seed % 3, 500 + seed);
    const auto g = build_graph(fam);
    SynthesisOptions with;
    with.max_rankings = fam.size();
    SynthesisOptions without = with;
    without.permutation_shortcut = false;
    const auto a = find_generating_family(g, with);
    const auto b = find_generating_family(g, without);
    ASSERT_TRUE(a.found()) << format_family(fam);
    ASSERT_TRUE(b.found()) << format_family(fam);
    ASSERT_EQ(build_graph(*a.witness), g);
    ASSERT_EQ(build_graph(*b.witness), g);
  }
}

TEST(FindGeneratingFamily, AgreesWithCompetitivityCatalogue) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto masks = oracle::competitivity_graph_masks(n);
    for (const auto& g : oracle::all_labelled_graphs(n)) {
      const auto r = find_generating_family(g);
      ASSERT_FALSE(r.unknown());
      ASSERT_EQ(r.found(), masks.contains(oracle::mask_of(g))) << oracle::mask_of(g);
      if (r.found()) {
        ASSERT_EQ(build_graph(*r.witness), g);
      }
    }
  }
}

}  // namespace
}  // namespace compgraph
