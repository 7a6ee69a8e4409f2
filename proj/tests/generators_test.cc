#include <gtest/gtest.h>

#include <set>

#include "compnum/formats.hpp"
#include "compnum/generators.hpp"

namespace compnum {
namespace {

TEST(GeneratorsTest, Families) {
  EXPECT_EQ(generate({"cycle", {4}}), Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(generate({"complete-multipartite", {1, 3}}), star_graph(3));
  EXPECT_EQ(generate({"path", {2}}), complete_graph(2));
  EXPECT_EQ(generate({"edgeless", {3}}).edge_count(), 0u);
  EXPECT_EQ(generate({"complete", {5}}).edge_count(), 10u);
  // K_{2,2} on blocks {0,1},{2,3} is a 4-cycle 0-2-1-3-0.
  EXPECT_EQ(generate({"multipartite", {2, 2}}).edge_set(),
            (EdgeSet{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(GeneratorsTest, RandomIsDeterministicPerSeed) {
  const Graph a = generate({"random", {12, 0.5}}, 7);
  const Graph b = generate({"random", {12, 0.5}}, 7);
  const Graph c = generate({"random", {12, 0.5}}, 8);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(generate({"random", {6, 0.0}}, 1).edge_count(), 0u);
  EXPECT_EQ(generate({"random", {6, 1.0}}, 1), complete_graph(6));
}

TEST(GeneratorsTest, RejectsBadInput) {
  EXPECT_THROW(generate({"hypercube", {3}}), std::invalid_argument);
  EXPECT_THROW(generate({"random", {5, 0.5}}), std::invalid_argument);  // no seed
  EXPECT_THROW(generate({"random", {5, 1.5}}, 1), std::invalid_argument);
  EXPECT_THROW(generate({"cycle", {2}}), std::invalid_argument);
  EXPECT_THROW(generate({"path", {2.5}}), std::invalid_argument);
  EXPECT_THROW(generate({"path", {}}), std::invalid_argument);
  EXPECT_THROW(generate({"multipartite", {0, 2}}), std::invalid_argument);
  EXPECT_THROW(generate({"complete", {63}}), std::invalid_argument);
}

TEST(LabeledGraphsTest, Counts) {
  EXPECT_EQ(all_labeled_graphs(0).size(), 1u);
  EXPECT_EQ(all_labeled_graphs(2).size(), 2u);
  EXPECT_EQ(all_labeled_graphs(3).size(), 8u);
  EXPECT_EQ(all_labeled_graphs(5).size(), 1024u);
}

TEST(LabeledGraphsTest, EachGraphOnceInPatternOrder) {
  const auto graphs = all_labeled_graphs(4);
  std::set<std::string> seen;
  for (const Graph& g : graphs) seen.insert(write_graph6(g));
  EXPECT_EQ(seen.size(), 64u);
  EXPECT_EQ(graphs.front().edge_count(), 0u);
  EXPECT_EQ(graphs[1].edge_set(), (EdgeSet{{0, 1}}));
  EXPECT_EQ(graphs[2].edge_set(), (EdgeSet{{0, 2}}));
  EXPECT_EQ(graphs.back(), complete_graph(4));
}

TEST(LabeledGraphsTest, LargeOrdersNeedOverride) {
  EXPECT_THROW(all_labeled_graphs(7), std::invalid_argument);
  EXPECT_THROW(all_labeled_graphs(12, true), std::invalid_argument);
  int visited = 0;
  for_each_labeled_graph(1, [&](const Graph&) { ++visited; }, true);
  EXPECT_EQ(visited, 1);
}

}  // namespace
}  // namespace compnum
