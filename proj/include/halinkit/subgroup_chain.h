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

// Exhaustive subgroup lattice of Sym(n) for n <= 5, used to check the
// longest-chain length ceil(3n/2) - b(n) - 1 directly. Works on its own
// multiplication table; it does not go through PermGroup.

#ifndef HALINKIT_SUBGROUP_CHAIN_H_
#define HALINKIT_SUBGROUP_CHAIN_H_

#include <vector>

namespace halinkit {

inline constexpr int kMaxLatticeDegree = 5;

struct SubgroupChainResult {
  int degree = 0;
  int num_subgroups = 0;
  // Length of the longest chain Sym(n) = H_0 > H_1 > ... > H_k = 1.
  int length = 0;
  // Orders |H_0|, ..., |H_k| along one longest chain.
  std::vector<int> orders;
};

// Throws PreconditionError for n < 1 or n > 5.
SubgroupChainResult LongestSubgroupChain(int n);

}  // namespace halinkit

#endif  // HALINKIT_SUBGROUP_CHAIN_H_
