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

#include "halinkit/errors.h"
#include "halinkit/invariants.h"
#include "halinkit/subgroup_chain.h"

namespace halinkit {
namespace {

TEST(SubgroupChainTest, LengthsForSmallDegrees) {
  EXPECT_EQ(LongestSubgroupChain(1).length, 0);
  EXPECT_EQ(LongestSubgroupChain(2).length, 1);
  EXPECT_EQ(LongestSubgroupChain(3).length, 2);
  EXPECT_EQ(LongestSubgroupChain(4).length, 4);
  EXPECT_EQ(LongestSubgroupChain(5).length, 5);
}

TEST(SubgroupChainTest, MatchesChainBound) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(LongestSubgroupChain(n).length, ComputeBounds(n).chain_bound) << n;
  }
}

TEST(SubgroupChainTest, LatticeSizes) {
  // Known subgroup counts of S_3, S_4, S_5.
  EXPECT_EQ(LongestSubgroupChain(3).num_subgroups, 6);
  EXPECT_EQ(LongestSubgroupChain(4).num_subgroups, 30);
  EXPECT_EQ(LongestSubgroupChain(5).num_subgroups, 156);
}

TEST(SubgroupChainTest, ChainOrdersDivide) {
  const SubgroupChainResult r = LongestSubgroupChain(4);
  ASSERT_EQ(r.orders.size(), 5u);
  EXPECT_EQ(r.orders.front(), 24);
  EXPECT_EQ(r.orders.back(), 1);
  for (std::size_t i = 1; i < r.orders.size(); ++i) {
    EXPECT_EQ(r.orders[i - 1] % r.orders[i], 0);
    EXPECT_LT(r.orders[i], r.orders[i - 1]);
  }
}

TEST(SubgroupChainTest, RefusesLargeDegrees) {
  EXPECT_THROW(LongestSubgroupChain(6), PreconditionError);
  EXPECT_THROW(LongestSubgroupChain(0), PreconditionError);
}

}  // namespace
}  // namespace halinkit
