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

// Symmetry-breaking invariants of a graph, computed from its automorphism
// group A:
//
//   base                 S with trivial pointwise stabilizer A_(S)
//   determining number   least size of a base
//   distinguishing set   S with trivial setwise stabilizer A_S
//   distinguishing cost  least size of a distinguishing set, if any
//   motion               least number of points moved by a nontrivial element
//
// and the greedy construction of a distinguishing set from a base by a
// strictly decreasing chain of set stabilizers.
//
// Every search is exact. Subset searches run by ascending size, subsets in
// lexicographic order, so witnesses are the lexicographically least ones.

#ifndef HALINKIT_INVARIANTS_H_
#define HALINKIT_INVARIANTS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "halinkit/graph.h"
#include "halinkit/perm_group.h"
#include "halinkit/permutation.h"

namespace halinkit {

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

struct SearchOptions {
  // Subsets examined before a search gives up with ExhaustedError.
  std::uint64_t subset_budget = kDefaultSubsetBudget;
  // Groups up to this order are enumerated outright where that helps.
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
};

struct SubsetWitness {
  int size = 0;
  VertexSet witness;
};

bool IsBase(const PermGroup& aut, const VertexSet& s);
bool IsDistinguishing(const PermGroup& aut, const VertexSet& s);

SubsetWitness DeterminingNumber(const PermGroup& aut,
                                const SearchOptions& options = {});

// std::nullopt when no subset is distinguishing. Only sizes up to n/2 are
// searched: the complement of a distinguishing set is distinguishing.
std::optional<SubsetWitness> DistinguishingCost(
    const PermGroup& aut, const SearchOptions& options = {});

struct MotionResult {
  int motion = 0;
  // First minimal-motion element in chain order.
  Permutation witness;
};

// Throws PreconditionError("motion undefined") for the trivial group.
MotionResult Motion(const PermGroup& aut, const SearchOptions& options = {});

// Some element a with y and a(z) disjoint, or nullopt. Finite groups can
// fail where infinite ones with an infinite orbit cannot.
std::optional<Permutation> DisjointTranslate(const PermGroup& aut,
                                             const VertexSet& y,
                                             const VertexSet& z);

// Union of a(Y) over all a in aut with a(Y) meeting Y.
VertexSet OverlapRegion(const PermGroup& aut, const VertexSet& y);

struct ReducingStep {
  // Least vertex found, or nullopt when stalled.
  std::optional<Vertex> vertex;
  // True if the vertex came from the candidate filter (outside the overlap
  // region and moved by A_Y), false if from the exhaustive fallback.
  bool from_candidate_filter = false;
  VertexSet overlap_region;
};

// A vertex v outside Y with A_{Y+v} a proper subgroup of A_Y. Requires
// |Y| >= 2 and A_Y nontrivial (PreconditionError otherwise).
//
// Candidates outside the overlap region X that are moved by A_Y are tried
// first: for those, any g stabilizing Y+v but not Y would put v in g(Y) with
// g(Y) meeting Y, i.e. v in X. Only if none exists are all v tried in order.
ReducingStep ReducingVertex(const PermGroup& aut, const VertexSet& y);

struct Bounds {
  int n = 0;
  int popcount = 0;
  // ceil(5n/2) - b(n) - 1
  int cost_bound = 0;
  // ceil(3n/2) - b(n) - 1: longest subgroup chain in Sym(n).
  int chain_bound = 0;
};

// Exact integer evaluation. Throws PreconditionError for n < 1.
Bounds ComputeBounds(int n);

struct StabilizerChain {
  VertexSet base;
  std::vector<Vertex> added;
  // |A_{Y_i}| for Y_0 = base, Y_i = base + added[0..i).
  std::vector<GroupOrder> orders;
  // Per added vertex: whether the candidate filter produced it.
  std::vector<bool> from_candidate_filter;
  bool stalled = false;
  VertexSet final_set;
  // Absent when the base is empty.
  std::optional<Bounds> bounds;

  bool completed() const { return !stalled && orders.back() == 1; }
  int length() const { return static_cast<int>(added.size()); }
  // Final size within cost_bound and length within chain_bound.
  bool within_bound() const;
};

// Grows Y from the base by ReducingVertex until A_Y is trivial or no vertex
// reduces it (stalled). Throws PreconditionError unless `base` is a base.
StabilizerChain GreedyDistinguishingChain(const PermGroup& aut,
                                          const VertexSet& base);

// |A_F : A_(F)|: the number of permutations of F induced by A_F.
GroupOrder SetToPointStabilizerIndex(const PermGroup& aut, const VertexSet& f);

struct SubdegreeEntry {
  Vertex vertex = 0;
  int max_orbit = 1;
};

// For each vertex v, the largest orbit of A_(v).
std::vector<SubdegreeEntry> SubdegreeReport(const PermGroup& aut);

}  // namespace halinkit

#endif  // HALINKIT_INVARIANTS_H_
