// Copyright 2026 The Halinkit Authors
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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "halinkit/automorphisms.h"
#include "halinkit/generators.h"
#include "oracles/brute_force.h"

namespace halinkit {
namespace {

TEST(RefineTest, PathSplitsByDegree) {
  const ColoredPartition p = Refine(PathGraph(3), ColoredPartition::Unit(3));
  std::vector<VertexSet> cells = p.cells();
  std::sort(cells.begin(), cells.end());
  EXPECT_EQ(cells, (std::vector<VertexSet>{{0, 2}, {1}}));
  EXPECT_TRUE(IsEquitable(PathGraph(3), p));
}

TEST(RefineTest, RegularGraphUnchanged) {
  const ColoredPartition p = Refine(CompleteGraph(4), ColoredPartition::Unit(4));
  EXPECT_EQ(p.num_cells(), 1);
}

TEST(RefineTest, DiscreteUnchanged) {
  const ColoredPartition d = ColoredPartition::FromCells(4, {{2}, {0}, {3}, {1}});
  EXPECT_EQ(Refine(CycleGraph(4), d), d);
}

TEST(RefineTest, ResultIsEquitable) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = RandomConnectedGraph(9, 0.3, seed);
    EXPECT_TRUE(IsEquitable(g, Refine(g, ColoredPartition::Unit(9))));
  }
}

TEST(AutomorphismGroupTest, KnownOrders) {
  EXPECT_EQ(AutomorphismGroup(PathGraph(3)).order(), 2);
  EXPECT_EQ(AutomorphismGroup(CycleGraph(4)).order(), 8);
  EXPECT_EQ(AutomorphismGroup(PetersenGraph()).order(), 120);
  EXPECT_EQ(AutomorphismGroup(CompleteBipartiteGraph(3, 3)).order(), 72);
  EXPECT_EQ(AutomorphismGroup(BinaryTree(3).graph).order(), 128);
  EXPECT_EQ(AutomorphismGroup(CompleteGraph(9)).order(), 362880);
  EXPECT_EQ(AutomorphismGroup(PathGraph(1)).order(), 1);
}

TEST(AutomorphismGroupTest, PetersenMatchesBruteForce) {
  const auto elements = oracle::Automorphisms(PetersenGraph());
  EXPECT_EQ(elements.size(), 120u);
  const PermGroup aut = AutomorphismGroup(PetersenGraph());
  for (const auto& e : elements) EXPECT_TRUE(aut.contains(Permutation(e)));
}

TEST(AutomorphismGroupTest, GeneratorsAreAutomorphisms) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = RandomConnectedGraph(12, 0.2, seed);
    const PermGroup aut = AutomorphismGroup(g);
    for (const Permutation& p : aut.generators()) {
      EXPECT_TRUE(IsAutomorphism(g, p));
    }
  }
}

TEST(AutomorphismGroupTest, SmallCorpusMatchesBruteForce) {
  for (const auto& item : oracle::Corpus(20)) {
    const auto elements = oracle::Automorphisms(item.graph);
    const PermGroup aut = AutomorphismGroup(item.graph);
    EXPECT_EQ(aut.order(), elements.size()) << item.name;
  }
}

TEST(AutomorphismGroupTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = RandomConnectedGraph(10, 0.3, seed);
    std::vector<int> relabel(10);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    EXPECT_EQ(AutomorphismGroup(g).order(), AutomorphismGroup(Relabel(g, relabel)).order());
  }
}

}  // namespace
}  // namespace halinkit
