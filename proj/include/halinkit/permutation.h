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

#ifndef HALINKIT_PERMUTATION_H_
#define HALINKIT_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "halinkit/graph.h"

namespace halinkit {

// A bijection on {0..n-1} stored as its image array.
//
// Composition is right-to-left: (a * b)(x) == a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  // Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation Identity(int degree);
  // Builds from disjoint cycles, e.g. FromCycles(5, {{0, 1, 2, 3, 4}}).
  static Permutation FromCycles(int degree,
                                const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  // Number of moved points.
  int motion() const;
  // Least moved point, or -1 for the identity.
  int first_moved_point() const;
  // Image of a vertex set, sorted.
  VertexSet apply(const VertexSet& set) const;
  bool fixes_pointwise(const VertexSet& set) const;
  bool stabilizes(const VertexSet& set) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
  std::string ToCycleString() const;

 private:
  std::vector<int> images_;
};

// Motion of a single permutation: the number of points it moves.
inline int MotionOf(const Permutation& p) { return p.motion(); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// True iff p maps edges to edges and non-edges to non-edges.
bool IsAutomorphism(const Graph& g, const Permutation& p);

}  // namespace halinkit

#endif  // HALINKIT_PERMUTATION_H_
