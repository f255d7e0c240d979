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


// Permutation topology on a finite domain: the confluent, the ultrametric
// d = 2^-conf and the metric d* = d(a, b) + d(a^-1, b^-1), all relative to an
// exhaustion X_0 < X_1 < ... < X_m.

#ifndef HALINKIT_PERM_TOPOLOGY_H_
#define HALINKIT_PERM_TOPOLOGY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halinkit/dyadic.h"
#include "halinkit/graph.h"
#include "halinkit/halin_limit.h"
#include "halinkit/perm_group.h"
#include "halinkit/permutation.h"

namespace halinkit {

class Exhaustion {
 public:
  // Throws PreconditionError unless the sets are strictly nested, X_0 is
  // nonempty and every vertex lies in [0, degree).
  Exhaustion(int degree, std::vector<VertexSet> sets);

  // X_i = {0, ..., i} for i < degree.
  static Exhaustion Prefixes(int degree);
  // X_i = F_i of a construction run, i = 0..num_rounds().
  static Exhaustion FromConstruction(const ConstructionState& state);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(sets_.size()); }
  const VertexSet& set(int i) const { return sets_[i]; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  // Whether the last set is the whole domain.
  bool cover() const { return static_cast<int>(sets_.back().size()) == degree_; }
  // Least i with v in X_i, or -1.
  int first_index(Vertex v) const { return first_index_[v]; }

 private:
  int degree_ = 0;
  std::vector<VertexSet> sets_;
  std::vector<int> first_index_;
};

// Least i such that a and b disagree somewhere in X_i; nullopt means
// "equal on all" of X_m.
std::optional<int> Confluent(const Exhaustion& e, const Permutation& a,
                             const Permutation& b);

// 2^-conf, or 0 when equal on all.
Dyadic Dist(const Exhaustion& e, const Permutation& a, const Permutation& b);
Dyadic DistStar(const Exhaustion& e, const Permutation& a,
                const Permutation& b);

using Triple = std::array<Permutation, 3>;

// Checks symmetry, d(x, x) = 0 and the strong triangle inequality in every
// rotation of each triple. Returns one line per violation.
std::vector<std::string> CheckUltrametric(const Exhaustion& e,
                                          const std::vector<Triple>& triples);

// Entry k is max over l > k of d(seq[k], seq[l]); one entry fewer than the
// sequence.
std::vector<Dyadic> CheckCauchy(const Exhaustion& e,
                                const std::vector<Permutation>& sequence);

struct BallReport {
  int index = 0;
  std::uint64_t ball_size = 0;
  GroupOrder stabilizer_order = 0;
  bool matches = false;
};

// Compares {b in group : d(id, b) < 2^-k} with the pointwise stabilizer of
// X_k by enumerating the group (at most `limit` elements).
BallReport BallVersusStabilizer(const PermGroup& group, const Exhaustion& e,
                                int k, std::uint64_t limit = 1000000);

// `count` random triples of group elements from a seeded generator.
std::vector<Triple> RandomTriples(const PermGroup& group, int count,
                                  std::uint64_t seed);

}  // namespace halinkit

#endif  // HALINKIT_PERM_TOPOLOGY_H_
