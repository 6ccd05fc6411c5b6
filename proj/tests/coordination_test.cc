// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "transit/coordination.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "transit/oracle.h"

namespace transit {
namespace {

Graph RandomGraph(std::mt19937& rng, int n, int percent) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng() % 100) < percent) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph RandomForest(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    if (rng() % 5 == 0) continue;
    edges.push_back({static_cast<int>(rng() % v), v});
  }
  return Graph(n, edges);
}

TEST(GraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidInput);
}

TEST(GraphTest, Shapes) {
  EXPECT_TRUE(Graph::Cycle(5).IsCycle());
  EXPECT_FALSE(Graph::Cycle(5).IsForest());
  EXPECT_TRUE(Graph::Clique(4).IsClique());
  EXPECT_EQ(Graph::Clique(4).num_edges(), 6);
  EXPECT_TRUE(Graph::Star(3).IsForest());
  EXPECT_EQ(Graph::Star(3).degree(0), 3);
  EXPECT_EQ(Graph(4, {{0, 1}, {2, 3}}).Components().size(), 2u);
}

TEST(ColoringTest, BestResponsesFollowTheMajority) {
  GraphColoringInstance inst(Graph::Star(3));
  Coloring col = {1, 2, 2, 1};
  EXPECT_EQ(inst.BestColours(col, 0), std::vector<int>({2}));
  EXPECT_FALSE(inst.IsBestResponse(col, 0));
  EXPECT_TRUE(inst.IsBestResponse(col, 3));
  EXPECT_EQ(inst.SocialWelfare(col), 2);
  EXPECT_TRUE(inst.IsNashEquilibrium({2, 2, 2, 2}));
}

TEST(ColoringTest, RejectsColoursOutsideTheSet) {
  GraphColoringInstance inst(Graph::Cycle(4));
  EXPECT_THROW(inst.CheckColoring({1, 2, 3, 1}), InvalidInput);
  EXPECT_THROW(inst.CheckColoring({1, 2}), InvalidInput);
  EXPECT_THROW(GraphColoringInstance(Graph::Cycle(4), {{1}, {1}}), InvalidInput);
}

TEST(BoundsTest, FourCycle) {
  CoordinationBoundsReport r = EfficiencyBounds(GraphColoringInstance(Graph::Cycle(4)));
  EXPECT_EQ(r.max_welfare, 8);
  EXPECT_EQ(r.worst_ne_welfare, 4);
  EXPECT_EQ(r.worst_stable_welfare, 0);
  EXPECT_EQ(r.posta, Rational(0));
  EXPECT_EQ(r.posta_bound, Rational(0));
  EXPECT_TRUE(r.AllHold());
}

TEST(BoundsTest, EdgelessGraphHasNoPrice) {
  EXPECT_THROW(EfficiencyBounds(GraphColoringInstance(Graph(3, {}))), UndefinedPrice);
}

TEST(BoundsTest, AgreesWithOracle) {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 5;
    Graph g = RandomGraph(rng, n, 55);
    if (g.num_edges() == 0) continue;
    GraphColoringInstance inst(g);
    CoordinationBoundsReport r = EfficiencyBounds(inst);
    oracle::ColoringAnswer o = oracle::SolveColoring(n, g.edges(), inst.colour_sets);
    EXPECT_EQ(r.max_welfare, o.max_welfare);
    EXPECT_EQ(r.worst_ne_welfare, o.worst_ne_welfare);
    EXPECT_EQ(r.worst_stable_welfare, o.worst_stable_welfare);
    EXPECT_EQ(r.num_ne, o.num_ne);
    EXPECT_EQ(r.num_stable, o.num_stable);
  }
}

TEST(StableCheckTest, FastAgreesWithExact) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 4;
    Graph g = RandomGraph(rng, n, 50);
    GraphColoringInstance inst(g);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Coloring col(n);
      for (int v = 0; v < n; ++v) col[v] = (mask >> v & 1u) ? 2 : 1;
      EXPECT_EQ(CheckStableTransitionFast(inst, col), CheckStableTransitionExact(inst, col))
          << "trial " << trial << " mask " << mask;
    }
  }
}

TEST(StableCheckTest, FastCheckNeedsTwoColours) {
  GraphColoringInstance inst(Graph::Cycle(3), {{1, 2}, {1, 2}, {1, 2, 3}});
  EXPECT_THROW(CheckStableTransitionFast(inst, {1, 1, 1}), NotTwoColour);
  EXPECT_TRUE(CheckStableTransitionExact(inst, {1, 1, 1}));
}

void ExpectStableNotNash(const GraphColoringInstance& inst, const Coloring& col) {
  EXPECT_TRUE(CheckStableTransitionExact(inst, col));
  EXPECT_FALSE(inst.IsNashEquilibrium(col));
}

TEST(ConstructionTest, Cycles) {
  for (int n = 4; n <= 8; ++n) {
    GraphColoringInstance inst(Graph::Cycle(n));
    std::optional<Coloring> col = ConstructStNotNe(inst, Topology::kCycle);
    ASSERT_TRUE(col.has_value()) << n;
    ExpectStableNotNash(inst, *col);
  }
  EXPECT_FALSE(ConstructStNotNe(GraphColoringInstance(Graph::Cycle(3)), Topology::kCycle));
}

TEST(ConstructionTest, EvenCliques) {
  for (int n : {4, 6}) {
    GraphColoringInstance inst(Graph::Clique(n));
    std::optional<Coloring> col = ConstructStNotNe(inst, Topology::kClique);
    ASSERT_TRUE(col.has_value());
    ExpectStableNotNash(inst, *col);
  }
}

TEST(ConstructionTest, OddCliquesHaveNone) {
  for (int n : {3, 5}) {
    GraphColoringInstance inst(Graph::Clique(n));
    EXPECT_FALSE(ConstructStNotNe(inst, Topology::kClique).has_value());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Coloring col(n);
      for (int v = 0; v < n; ++v) col[v] = (mask >> v & 1u) ? 2 : 1;
      EXPECT_FALSE(CheckStableTransitionExact(inst, col) && !inst.IsNashEquilibrium(col));
    }
  }
}

TEST(ConstructionTest, Forests) {
  std::mt19937 rng(73);
  int built = 0;
  for (int trial = 0; trial < 50; ++trial) {
    GraphColoringInstance inst(RandomForest(rng, 3 + trial % 8));
    std::optional<Coloring> col = ConstructStNotNe(inst, Topology::kForest);
    if (!col) continue;
    ++built;
    ExpectStableNotNash(inst, *col);
  }
  EXPECT_GT(built, 0);
}

TEST(ConstructionTest, TopologyMismatch) {
  GraphColoringInstance cycle(Graph::Cycle(4));
  EXPECT_THROW(ConstructStNotNe(cycle, Topology::kClique), TopologyMismatch);
  EXPECT_THROW(ConstructStNotNe(cycle, Topology::kForest), TopologyMismatch);
  EXPECT_FALSE(ParseTopology("torus").has_value());
  EXPECT_EQ(ParseTopology("cycle"), Topology::kCycle);
}

}  // namespace
}  // namespace transit
