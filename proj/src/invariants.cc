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

#include "halinkit/invariants.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <utility>

#include "halinkit/errors.h"

namespace halinkit {
namespace {

// Calls visit(subset) on the k-subsets of {0..n-1} in lexicographic order
// until it returns true. Charges each subset against `remaining`.
std::optional<VertexSet> FirstSubset(
    int n, int k, std::uint64_t& remaining,
    const std::function<bool(const VertexSet&)>& visit) {
  VertexSet subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    if (remaining == 0) {
      throw ExhaustedError("subset budget exhausted at size " +
                           std::to_string(k));
    }
    --remaining;
    if (visit(subset)) return subset;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

void CheckPoints(const PermGroup& aut, const VertexSet& s) {
  for (Vertex v : s) {
    if (v < 0 || v >= aut.degree()) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " out of range");
    }
  }
}

bool IsProperSubgroup(const PermGroup& h, const PermGroup& k) {
  if (h.order() >= k.order()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& g) { return k.contains(g); });
}

}  // namespace

bool IsBase(const PermGroup& aut, const VertexSet& s) {
  CheckPoints(aut, s);
  return PointStabilizer(aut, s).order() == 1;
}

bool IsDistinguishing(const PermGroup& aut, const VertexSet& s) {
  CheckPoints(aut, s);
  return SetStabilizer(aut, s).order() == 1;
}

SubsetWitness DeterminingNumber(const PermGroup& aut,
                                const SearchOptions& options) {
  std::uint64_t remaining = options.subset_budget;
  for (int k = 0; k <= aut.degree(); ++k) {
    auto found = FirstSubset(aut.degree(), k, remaining,
                             [&](const VertexSet& s) { return IsBase(aut, s); });
    if (found) return {k, *found};
  }
  // The full vertex set is always a base.
  throw std::logic_error("no base found");
}

std::optional<SubsetWitness> DistinguishingCost(const PermGroup& aut,
                                                const SearchOptions& options) {
  std::uint64_t remaining = options.subset_budget;
  for (int k = 0; k <= aut.degree() / 2; ++k) {
    auto found = FirstSubset(
        aut.degree(), k, remaining,
        [&](const VertexSet& s) { return IsDistinguishing(aut, s); });
    if (found) return SubsetWitness{k, *found};
  }
  return std::nullopt;
}

MotionResult Motion(const PermGroup& aut, const SearchOptions& options) {
  if (aut.order() == 1) throw PreconditionError("motion undefined");
  const int n = aut.degree();
  MotionResult best{n + 1, Permutation()};

  if (aut.order() <= options.enumeration_limit) {
    for (const Permutation& g : Elements(aut, options.enumeration_limit)) {
      if (g.is_identity()) continue;
      if (g.motion() < best.motion) best = {g.motion(), g};
    }
    return best;
  }

  // Branch and bound over the coset tree. Base points moved so far bound the
  // motion of every completion from below.
  const Bsgs& chain = aut.bsgs();
  const std::vector<int> base = chain.base();
  WalkCosetTree(
      chain,
      [&](std::size_t level, int image, const Permutation& partial) {
        int moved = image != base[level];
        for (std::size_t j = 0; j < level; ++j) moved += partial(base[j]) != base[j];
        return moved < best.motion;
      },
      [&](const Permutation& g) {
        if (!g.is_identity() && g.motion() < best.motion) {
          best = {g.motion(), g};
        }
        return false;
      },
      chain.levels().size());
  return best;
}

std::optional<Permutation> DisjointTranslate(const PermGroup& aut,
                                             const VertexSet& y,
                                             const VertexSet& z) {
  CheckPoints(aut, y);
  CheckPoints(aut, z);
  if (z.empty() || y.empty()) return Permutation::Identity(aut.degree());
  const Bsgs chain = BsgsWithPrefix(aut, z);
  std::optional<Permutation> found;
  WalkCosetTree(
      chain,
      [&](std::size_t, int image, const Permutation&) {
        return !Contains(y, image);
      },
      [&](const Permutation& g) {
        found = g;
        return true;
      },
      z.size());
  return found;
}

VertexSet OverlapRegion(const PermGroup& aut, const VertexSet& y) {
  CheckPoints(aut, y);
  // An element a with a(y1) = y2 factors as t * h with t a fixed element
  // mapping y1 to y2 and h in A_(y1); so the union of a(Y) over such a is
  // t applied to the A_(y1)-orbits of Y.
  std::vector<Vertex> region;
  for (Vertex y1 : y) {
    const Bsgs chain = BsgsWithPrefix(aut, {y1});
    const BsgsLevel& top = chain.levels().front();
    const Bsgs tail = chain.Suffix(1);
    std::vector<Permutation> gens;
    if (!tail.levels().empty()) gens = tail.levels().front().generators;
    const PermGroup stabilizer(aut.degree(), std::move(gens), tail);
    VertexSet spread;
    for (Vertex z : y) spread = Union(spread, Orbit(stabilizer, z));
    for (Vertex y2 : y) {
      if (!top.in_orbit(y2)) continue;
      const Permutation& t = top.coset_rep(y2);
      for (Vertex w : spread) region.push_back(t(w));
    }
  }
  return MakeVertexSet(std::move(region));
}

ReducingStep ReducingVertex(const PermGroup& aut, const VertexSet& y) {
  CheckPoints(aut, y);
  if (y.size() < 2) {
    throw PreconditionError("reducing vertex needs |Y| >= 2");
  }
  const PermGroup stab = SetStabilizer(aut, y);
  if (stab.order() == 1) {
    throw PreconditionError("set stabilizer of Y is already trivial");
  }

  ReducingStep step;
  step.overlap_region = OverlapRegion(aut, y);
  std::vector<char> moved(aut.degree(), 0);
  for (const Permutation& g : stab.generators()) {
    for (int x = 0; x < aut.degree(); ++x) moved[x] |= g(x) != x;
  }
  for (Vertex v = 0; v < aut.degree(); ++v) {
    if (!moved[v] || Contains(step.overlap_region, v)) continue;
    const PermGroup extended = SetStabilizer(aut, Union(y, {v}));
    if (!IsProperSubgroup(extended, stab)) {
      throw std::logic_error("candidate filter produced a non-reducing vertex " +
                             std::to_string(v));
    }
    step.vertex = v;
    step.from_candidate_filter = true;
    return step;
  }
  for (Vertex v = 0; v < aut.degree(); ++v) {
    if (Contains(y, v)) continue;
    if (IsProperSubgroup(SetStabilizer(aut, Union(y, {v})), stab)) {
      step.vertex = v;
      return step;
    }
  }
  return step;
}

Bounds ComputeBounds(int n) {
  if (n < 1) {
    throw PreconditionError("bounds need a nonempty base, got n=" +
                            std::to_string(n));
  }
  Bounds b;
  b.n = n;
  b.popcount = std::popcount(static_cast<unsigned>(n));
  b.cost_bound = (5 * n + 1) / 2 - b.popcount - 1;
  b.chain_bound = (3 * n + 1) / 2 - b.popcount - 1;
  return b;
}

bool StabilizerChain::within_bound() const {
  if (!bounds) return true;
  return static_cast<int>(final_set.size()) <= bounds->cost_bound &&
         length() <= bounds->chain_bound;
}

StabilizerChain GreedyDistinguishingChain(const PermGroup& aut,
                                          const VertexSet& base) {
  CheckPoints(aut, base);
  if (!IsBase(aut, base)) {
    throw PreconditionError("the given vertex set is not a base");
  }
  StabilizerChain chain;
  chain.base = base;
  chain.final_set = base;
  if (!base.empty()) chain.bounds = ComputeBounds(static_cast<int>(base.size()));

  // A base of size <= 1 is its own set stabilizer's fixed set, so A_B is
  // already trivial there.
  GroupOrder order = SetStabilizer(aut, base).order();
  chain.orders.push_back(order);
  while (order != 1) {
    const ReducingStep step = ReducingVertex(aut, chain.final_set);
    if (!step.vertex) {
      chain.stalled = true;
      break;
    }
    chain.added.push_back(*step.vertex);
    chain.from_candidate_filter.push_back(step.from_candidate_filter);
    chain.final_set = Union(chain.final_set, {*step.vertex});
    order = SetStabilizer(aut, chain.final_set).order();
    chain.orders.push_back(order);
  }
  return chain;
}

GroupOrder SetToPointStabilizerIndex(const PermGroup& aut, const VertexSet& f) {
  CheckPoints(aut, f);
  return SetStabilizer(aut, f).order() / PointStabilizer(aut, f).order();
}

std::vector<SubdegreeEntry> SubdegreeReport(const PermGroup& aut) {
  std::vector<SubdegreeEntry> report;
  for (Vertex v = 0; v < aut.degree(); ++v) {
    const PermGroup stab = PointStabilizer(aut, {v});
    int largest = 1;
    for (const VertexSet& orbit : Orbits(stab)) {
      largest = std::max(largest, static_cast<int>(orbit.size()));
    }
    report.push_back({v, largest});
  }
  return report;
}

}  // namespace halinkit
