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

// Permutation groups given by generators, with a base and strong generating
// set (BSGS) computed by deterministic Schreier-Sims.

#ifndef HALINKIT_PERM_GROUP_H_
#define HALINKIT_PERM_GROUP_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "halinkit/graph.h"
#include "halinkit/permutation.h"

namespace halinkit {

using GroupOrder = boost::multiprecision::cpp_int;

// One level of a stabilizer chain G = G^(0) >= G^(1) >= ... >= G^(k) = 1,
// where G^(i) fixes base points b_0..b_{i-1}.
struct BsgsLevel {
  int base_point = 0;
  // Strong generators lying in G^(i).
  std::vector<Permutation> generators;
  // Basic orbit of base_point under G^(i), in discovery order.
  std::vector<int> orbit;
  // transversal[k] maps base_point to orbit[k].
  std::vector<Permutation> transversal;
  // Point -> index into orbit/transversal, or -1.
  std::vector<int> orbit_index;

  bool in_orbit(int x) const { return orbit_index[x] >= 0; }
  const Permutation& coset_rep(int x) const {
    return transversal[orbit_index[x]];
  }
};

class Bsgs {
 public:
  Bsgs() = default;
  Bsgs(int degree, std::vector<BsgsLevel> levels)
      : degree_(degree), levels_(std::move(levels)) {}

  int degree() const { return degree_; }
  const std::vector<BsgsLevel>& levels() const { return levels_; }
  std::vector<int> base() const;
  GroupOrder order() const;

  // Strips g through the chain from `from_level`. Returns the residue and the
  // level at which stripping stopped (levels().size() if it passed them all).
  std::pair<Permutation, std::size_t> Sift(const Permutation& g,
                                           std::size_t from_level = 0) const;
  bool Contains(const Permutation& g) const;

  // Chain for G^(level): levels [level, end).
  Bsgs Suffix(std::size_t level) const;

  // Uniform random element: product of uniformly chosen coset reps.
  Permutation RandomElement(std::mt19937_64& rng) const;

 private:
  int degree_ = 0;
  std::vector<BsgsLevel> levels_;
};

// Deterministic Schreier-Sims. The base starts with `base_prefix` (kept even
// where redundant) and is extended, when a new point is needed, by the least
// point moved by the offending residue. When `known_order` is given the
// construction stops as soon as the basic orbits account for it.
Bsgs SchreierSims(int degree, const std::vector<Permutation>& generators,
                  const std::vector<int>& base_prefix = {},
                  const std::optional<GroupOrder>& known_order = std::nullopt);

// A permutation group given by generators. The BSGS is built lazily on first
// query, at most once, and shared between copies; a PermGroup can be read
// from several threads.
class PermGroup {
 public:
  PermGroup() : PermGroup(0) {}
  explicit PermGroup(int degree, std::vector<Permutation> generators = {});
  // Adopts an already computed chain for these generators.
  PermGroup(int degree, std::vector<Permutation> generators, Bsgs bsgs);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Bsgs& bsgs() const;
  bool has_bsgs() const;

  GroupOrder order() const { return bsgs().order(); }
  bool is_trivial() const { return generators_.empty(); }
  bool contains(const Permutation& p) const;

 private:
  struct Cache;
  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

// Forces construction of the cached BSGS.
PermGroup BuildBsgs(const PermGroup& group);

// Chain for `group` whose base begins with `prefix`.
Bsgs BsgsWithPrefix(const PermGroup& group, const std::vector<int>& prefix);

VertexSet Orbit(const PermGroup& group, int x);

// All orbits, each sorted, listed by least element.
std::vector<VertexSet> Orbits(const PermGroup& group);

// Elements fixing every point of s.
PermGroup PointStabilizer(const PermGroup& group, const VertexSet& s);

// Elements mapping s onto itself. Backtracks over a chain whose base starts
// with s, pruning every branch where a point of s leaves s.
PermGroup SetStabilizer(const PermGroup& group, const VertexSet& s);

// Every element exactly once, in chain order. Throws ExhaustedError carrying
// the order when it exceeds `limit`.
std::vector<Permutation> Elements(const PermGroup& group, std::uint64_t limit);

// Depth-first walk over the chain's coset tree. At level i the candidate
// image of b_i under the partial product p = u_0 * ... * u_{i-1} * u is
// offered to `accept(level, image, p_before)`; rejected branches are
// skipped. `leaf(element)` is called on complete products and returns true
// to stop the walk. Returns true if stopped early.
bool WalkCosetTree(
    const Bsgs& bsgs,
    const std::function<bool(std::size_t, int, const Permutation&)>& accept,
    const std::function<bool(const Permutation&)>& leaf,
    std::size_t stop_level);

}  // namespace halinkit

#endif  // HALINKIT_PERM_GROUP_H_
