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

// Test-corpus generators. Vertex numbering per family:
//
//   path(n)           0 - 1 - ... - (n-1); endpoints 0 and n-1.
//   cycle(n)          i adjacent to i+1 mod n; needs n >= 3.
//   complete(n)       every pair.
//   complete_bipartite(a, b)
//                     parts {0..a-1} and {a..a+b-1}.
//   petersen          outer 5-cycle 0..4, spokes i - i+5, inner pentagram
//                     5+i - 5+(i+2 mod 5).
//   binary_tree(D)    complete rooted binary tree, breadth-first from the
//                     root 0; children of v are 2v+1 and 2v+2. Label
//                     "depth=d". Boundary = the 2^D leaves.
//   comb(D)           spine s_0 .. s_D with two pendant teeth per spine
//                     vertex. s_i = 3i, its teeth 3i+1 and 3i+2, all three
//                     labelled "depth=i". Boundary = {s_D and its teeth}.
//
// binary_tree and comb are truncations of infinite graphs with no finite
// base: every finite vertex set is fixed pointwise by some swap of two
// isomorphic branches further out.

#ifndef HALINKIT_GENERATORS_H_
#define HALINKIT_GENERATORS_H_

#include <cstdint>
#include <string>

#include "halinkit/graph.h"

namespace halinkit {

Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph CompleteBipartiteGraph(int a, int b);
Graph PetersenGraph();
TruncatedFamily BinaryTree(int depth);
TruncatedFamily Comb(int depth);

// Connected G(n, p) sample; redraws until connected. Deterministic in seed.
Graph RandomConnectedGraph(int n, double edge_probability, std::uint64_t seed);

// Builds a family by CLI name ("path", "cycle", "complete", "petersen",
// "binary-tree", "comb"). `size` is n for the first three and depth for the
// trees. Throws PreconditionError for unknown names or invalid sizes.
Graph GenerateByName(const std::string& family, int size);

}  // namespace halinkit

#endif  // HALINKIT_GENERATORS_H_
