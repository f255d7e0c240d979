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
#include <set>

#include "halinkit/errors.h"
#include "halinkit/generators.h"
#include "halinkit/halin_limit.h"

namespace halinkit {
namespace {

TEST(EpsilonWordTest, ParseAndIndex) {
  EXPECT_EQ(EpsilonWord::Parse("0110").ToString(), "0110");
  EXPECT_EQ(EpsilonWord::FromIndex(6, 4).ToString(), "0110");
  EXPECT_EQ(EpsilonWord::FromIndex(1, 3)[2], 1);
  EXPECT_THROW(EpsilonWord::Parse(""), PreconditionError);
  EXPECT_THROW(EpsilonWord::Parse("012"), PreconditionError);
}

TEST(FixingOracleTest, RootFixedSwapsUnderLeftChild) {
  const TruncatedFamily t = BinaryTree(4);
  const auto phi = FixingOracle(t, {0});
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(IsAutomorphism(t.graph, *phi));
  EXPECT_EQ((*phi)(0), 0);
  EXPECT_EQ((*phi)(1), 1);
  EXPECT_EQ((*phi)(3), 4);
  EXPECT_EQ((*phi)(15), 19);  // leaves move
  EXPECT_EQ((*phi)(2), 2);
}

TEST(FixingOracleTest, InteriorFixedSwapsUnderDepthOneVertex) {
  const TruncatedFamily t = BinaryTree(2);
  const auto phi = FixingOracle(t, {0, 1, 2});
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(IsAutomorphism(t.graph, *phi));
  EXPECT_TRUE(phi->fixes_pointwise({0, 1, 2}));
  EXPECT_EQ((*phi)(3), 4);
}

TEST(FixingOracleTest, Exhaustion) {
  EXPECT_FALSE(FixingOracle(BinaryTree(1), {0}).has_value());
  EXPECT_THROW(FixingOracle(BinaryTree(1), {0, 1, 2}), PreconditionError);
  TruncatedFamily custom = BinaryTree(2);
  custom.kind = FamilyKind::kCustom;
  EXPECT_THROW(FixingOracle(custom, {0}), PreconditionError);
}

TEST(FixingOracleTest, AlwaysFixesAndMoves) {
  const TruncatedFamily t = BinaryTree(5);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet f;
    for (Vertex v = 0; v < t.graph.num_vertices(); ++v) {
      if (!t.on_boundary(v) && rng() % 4 == 0) f.push_back(v);
    }
    const auto phi = FixingOracle(t, f);
    if (!phi) continue;
    EXPECT_TRUE(IsAutomorphism(t.graph, *phi));
    EXPECT_TRUE(phi->fixes_pointwise(f));
    EXPECT_FALSE(phi->is_identity());
  }
}

TEST(FixingOracleTest, Comb) {
  const TruncatedFamily c = Comb(3);
  const auto phi = FixingOracle(c, {0, 1, 3});
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(IsAutomorphism(c.graph, *phi));
  EXPECT_EQ((*phi)(4), 5);
  EXPECT_FALSE(FixingOracle(c, {1, 4, 7}).has_value());
}

TEST(RunConstructionTest, Depth12ThreeRounds) {
  const ConstructionState s = RunConstruction(BinaryTree(12), 3);
  EXPECT_FALSE(s.exhausted);
  EXPECT_EQ(s.num_rounds(), 3);
  EXPECT_TRUE(CheckConstruction(s).empty());
  EXPECT_EQ(s.fixed_set(0), (VertexSet{0}));
  EXPECT_GE(s.exhausted_prefix(), 4);
}

TEST(RunConstructionTest, Errors) {
  EXPECT_THROW(RunConstruction(BinaryTree(4), 0), PreconditionError);
  const ConstructionState s = RunConstruction(BinaryTree(2), 5);
  EXPECT_TRUE(s.exhausted);
  EXPECT_LT(s.num_rounds(), 5);
  EXPECT_FALSE(s.exhaustion_reason.empty());
  EXPECT_TRUE(CheckConstruction(s).empty());
}

TEST(RunConstructionTest, InvariantsAcrossDepthsAndFamilies) {
  for (int depth = 1; depth <= 9; ++depth) {
    for (int k = 1; k <= 10; ++k) {
      EXPECT_TRUE(CheckConstruction(RunConstruction(BinaryTree(depth), k)).empty());
      EXPECT_TRUE(CheckConstruction(RunConstruction(Comb(depth), k)).empty());
    }
  }
}

TEST(RunConstructionTest, FixedSetsAreMinimal) {
  // Removing any vertex other than v_{k+1} and x_k from F_{k+1} loses an
  // image of F_k under some word.
  const ConstructionState s = RunConstruction(BinaryTree(8), 6);
  ASSERT_FALSE(s.exhausted);
  for (int k = 0; k < s.num_rounds(); ++k) {
    std::set<Vertex> images{s.rounds[k].moved, k + 1};
    for (std::uint64_t w = 0; w < (1u << (k + 1)); ++w) {
      const EpsilonWord word = EpsilonWord::FromIndex(w, k + 1);
      for (Vertex v : AlphaProduct(s, word, k).apply(s.rounds[k].fixed)) images.insert(v);
      for (Vertex v : AlphaInverseProduct(s, word, k).apply(s.rounds[k].fixed)) images.insert(v);
    }
    EXPECT_EQ(s.fixed_set(k + 1), VertexSet(images.begin(), images.end())) << k;
  }
}

TEST(RequiredTreeDepthTest, MatchesSimulation) {
  for (int k = 1; k <= 24; ++k) {
    const int depth = RequiredTreeDepth(k);
    EXPECT_FALSE(RunConstruction(BinaryTree(depth), k).exhausted) << k;
    EXPECT_TRUE(RunConstruction(BinaryTree(depth - 1), k).exhausted) << k;
  }
  EXPECT_EQ(RequiredTreeDepth(10), 5);
  EXPECT_THROW(RequiredTreeDepth(0), PreconditionError);
}

TEST(AlphaTest, Examples) {
  const ConstructionState s = RunConstruction(BinaryTree(12), 3);
  const EpsilonWord zeros = EpsilonWord::Parse("000");
  for (Vertex v : s.next_fixed) EXPECT_EQ(Alpha(s, zeros, v), v);
  for (const auto& w : {"000", "101", "111"}) EXPECT_EQ(Alpha(s, EpsilonWord::Parse(w), 0), 0);
  const Vertex x0 = s.rounds[0].moved;
  EXPECT_NE(Alpha(s, EpsilonWord::Parse("1"), x0), x0);
  EXPECT_THROW(Alpha(s, zeros, 8000), PreconditionError);
}

TEST(AlphaTest, StableAcrossRounds) {
  const ConstructionState s = RunConstruction(BinaryTree(10), 8);
  ASSERT_FALSE(s.exhausted);
  for (std::uint64_t w = 0; w < 256; w += 7) {
    const EpsilonWord word = EpsilonWord::FromIndex(w, 8);
    for (int k = 0; k < 8; ++k) {
      for (int l = k + 1; l < 8; ++l) {
        const Permutation ak = AlphaProduct(s, word, k);
        const Permutation al = AlphaProduct(s, word, l);
        for (Vertex v : s.fixed_set(k + 1)) EXPECT_EQ(ak(v), al(v));
      }
    }
  }
}

TEST(AlphaTest, InverseConsistency) {
  const ConstructionState s = RunConstruction(BinaryTree(12), 3);
  for (std::uint64_t w = 0; w < 8; ++w) {
    const EpsilonWord word = EpsilonWord::FromIndex(w, 3);
    for (int k = 0; k < 3; ++k) {
      EXPECT_TRUE((AlphaInverseProduct(s, word, k) * AlphaProduct(s, word, k)).is_identity());
    }
  }
}

TEST(AlphaTest, SequenceStartsWithIdentity) {
  const ConstructionState s = RunConstruction(BinaryTree(6), 4);
  const EpsilonWord word = EpsilonWord::Parse("1011");
  const auto seq = AlphaSequence(s, word);
  ASSERT_EQ(seq.size(), 5u);
  EXPECT_TRUE(seq[0].is_identity());
  for (int k = 0; k < 4; ++k) EXPECT_EQ(seq[k + 1], AlphaProduct(s, word, k));
}

TEST(DistinctnessTest, OneRound) {
  const ConstructionState s = RunConstruction(BinaryTree(4), 1);
  const DistinctnessReport r = VerifyDistinctness(s, 1);
  EXPECT_EQ(r.num_words, 2u);
  EXPECT_EQ(r.num_pairs, 1u);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_TRUE(r.all_witnessed());
  EXPECT_NE(s.rounds[0].phi(r.witnesses[0].vertex), r.witnesses[0].vertex);
}

TEST(DistinctnessTest, ThreeRoundsDepth12) {
  const ConstructionState s = RunConstruction(BinaryTree(12), 3);
  const DistinctnessReport r = VerifyDistinctness(s, 3);
  EXPECT_EQ(r.num_words, 8u);
  EXPECT_EQ(r.num_pairs, 28u);
  EXPECT_EQ(r.num_witnessed, 28u);
  for (const PairWitness& w : r.witnesses) {
    EXPECT_LT(w.first, w.second);
    EXPECT_TRUE(Contains(s.fixed_set(w.differing_index + 1), w.vertex));
  }
}

TEST(DistinctnessTest, ImageTablesDiffer) {
  const int k = 8;
  const ConstructionState s = RunConstruction(BinaryTree(RequiredTreeDepth(k)), k);
  std::set<std::vector<Vertex>> tables;
  for (std::uint64_t w = 0; w < (1u << k); ++w) {
    tables.insert(ImageTable(s, EpsilonWord::FromIndex(w, k)));
  }
  EXPECT_EQ(tables.size(), 1u << k);
  EXPECT_TRUE(VerifyDistinctness(s, k, false).all_witnessed());
}

TEST(FinitaryTest, Examples) {
  const ConstructionState s = RunConstruction(BinaryTree(12), 3);
  const EpsilonWord word = EpsilonWord::Parse("110");
  EXPECT_TRUE(VerifyFinitary(s, {}, word));
  EXPECT_TRUE(VerifyFinitary(s, {0}, word));
  EXPECT_TRUE(VerifyFinitary(s, {1, 0}, word));
  EXPECT_THROW(VerifyFinitary(s, {2}, word), PreconditionError);
  EXPECT_THROW(VerifyFinitary(s, {0}, EpsilonWord::Parse("11")), PreconditionError);
}

TEST(FinitaryTest, RandomTuplesLongRun) {
  const ConstructionState s = RunConstruction(BinaryTree(8), 12);
  ASSERT_FALSE(s.exhausted);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> bits(12);
    for (int& b : bits) b = static_cast<int>(rng() % 2);
    std::vector<Vertex> tuple(1 + rng() % 4);
    for (Vertex& v : tuple) v = static_cast<Vertex>(rng() % 11);
    EXPECT_TRUE(VerifyFinitary(s, tuple, EpsilonWord(bits)));
  }
}

}  // namespace
}  // namespace halinkit
