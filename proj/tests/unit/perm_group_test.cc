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

#include <random>

#include "halinkit/automorphisms.h"
#include "halinkit/errors.h"
#include "halinkit/generators.h"
#include "halinkit/perm_group.h"
#include "oracles/brute_force.h"

namespace halinkit {
namespace {

PermGroup Dihedral5() {
  return PermGroup(5, {Permutation::FromCycles(5, {{0, 1, 2, 3, 4}}),
                       Permutation::FromCycles(5, {{1, 4}, {2, 3}})});
}

PermGroup SymmetricGroup(int n) {
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = i;
  return PermGroup(n, {Permutation::FromCycles(n, {{0, 1}}),
                       Permutation::FromCycles(n, {cycle})});
}

TEST(PermGroupTest, Orders) {
  EXPECT_EQ(Dihedral5().order(), 10);
  EXPECT_EQ(PermGroup(4).order(), 1);
  EXPECT_EQ(SymmetricGroup(6).order(), 720);
  EXPECT_EQ(SymmetricGroup(25).order().str(), "15511210043330985984000000");
}

TEST(PermGroupTest, Membership) {
  const PermGroup d5 = Dihedral5();
  EXPECT_TRUE(d5.contains(Permutation::FromCycles(5, {{1, 4}, {2, 3}})));
  EXPECT_FALSE(d5.contains(Permutation::FromCycles(5, {{0, 1}})));
  EXPECT_TRUE(d5.contains(Permutation::Identity(5)));
  EXPECT_TRUE(PermGroup(3).contains(Permutation::Identity(3)));
}

TEST(PermGroupTest, Orbits) {
  const PermGroup d8 = AutomorphismGroup(CycleGraph(8));
  EXPECT_EQ(Orbit(d8, 0), (VertexSet{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(Orbit(PermGroup(5), 3), (VertexSet{3}));
  EXPECT_EQ(Orbit(PointStabilizer(d8, {0}), 1), (VertexSet{1, 7}));
  EXPECT_EQ(Orbits(PermGroup(3)).size(), 3u);
}

TEST(PermGroupTest, Stabilizers) {
  const PermGroup d8 = AutomorphismGroup(CycleGraph(8));
  EXPECT_EQ(PointStabilizer(d8, {0, 1}).order(), 1);
  EXPECT_EQ(PointStabilizer(d8, {}).order(), 16);
  EXPECT_EQ(PointStabilizer(d8, {0}).order(), 2);
  EXPECT_EQ(SetStabilizer(d8, {0, 1}).order(), 2);
  EXPECT_EQ(SetStabilizer(d8, {0, 1, 2, 3, 4, 5, 6, 7}).order(), 16);
  EXPECT_EQ(SetStabilizer(AutomorphismGroup(CompleteGraph(4)), {0, 1}).order(), 4);
}

TEST(PermGroupTest, Elements) {
  EXPECT_EQ(Elements(PermGroup(3), 10), std::vector<Permutation>{Permutation::Identity(3)});
  EXPECT_EQ(Elements(AutomorphismGroup(CycleGraph(4)), 100).size(), 8u);
  EXPECT_THROW(Elements(SymmetricGroup(5), 100), ExhaustedError);
}

TEST(PermGroupTest, StabilizersMatchBruteForce) {
  std::mt19937_64 rng(7);
  for (const auto& item : oracle::Corpus(30)) {
    const Graph& g = item.graph;
    const auto elements = oracle::Automorphisms(g);
    const PermGroup aut = AutomorphismGroup(g);
    for (int trial = 0; trial < 5; ++trial) {
      VertexSet s;
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (rng() % 3 == 0) s.push_back(v);
      }
      EXPECT_EQ(PointStabilizer(aut, s).order(), oracle::PointStabilizerOrder(elements, s))
          << item.name;
      EXPECT_EQ(SetStabilizer(aut, s).order(), oracle::SetStabilizerOrder(elements, s))
          << item.name;
    }
  }
}

TEST(PermGroupTest, ElementsMatchClosure) {
  const PermGroup g = SymmetricGroup(4);
  std::vector<oracle::Images> gens;
  for (const auto& p : g.generators()) gens.push_back(p.images());
  const auto expected = oracle::Closure(gens, 4);
  std::vector<oracle::Images> got;
  for (const auto& p : Elements(g, 1000)) got.push_back(p.images());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(PermGroupTest, BsgsWithPrefixStartsWithPrefix) {
  const PermGroup s6 = SymmetricGroup(6);
  const Bsgs chain = BsgsWithPrefix(s6, {4, 2});
  ASSERT_GE(chain.base().size(), 2u);
  EXPECT_EQ(chain.base()[0], 4);
  EXPECT_EQ(chain.base()[1], 2);
  EXPECT_EQ(chain.order(), 720);
}

TEST(PermGroupTest, RandomElementsAreMembers) {
  const PermGroup aut = AutomorphismGroup(PetersenGraph());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(aut.contains(aut.bsgs().RandomElement(rng)));
  }
}

TEST(PermGroupTest, CopiesShareLazyChain) {
  const PermGroup a = Dihedral5();
  EXPECT_FALSE(a.has_bsgs());
  const PermGroup b = a;
  EXPECT_EQ(b.order(), 10);
  EXPECT_TRUE(a.has_bsgs());
}

}  // namespace
}  // namespace halinkit
