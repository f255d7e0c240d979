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

#include "halinkit/perm_group.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <utility>

#include "halinkit/errors.h"

namespace halinkit {
namespace {

// Recomputes the basic orbit and transversal of `level` from its generators.
void ComputeOrbit(int degree, BsgsLevel& level) {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation::Identity(degree));
  level.orbit_index.assign(degree, -1);
  level.orbit_index[level.base_point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int x = level.orbit[k];
    for (const Permutation& g : level.generators) {
      const int y = g(x);
      if (level.orbit_index[y] >= 0) continue;
      level.orbit_index[y] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(g * level.transversal[k]);
    }
  }
}

GroupOrder OrbitProduct(const std::vector<BsgsLevel>& levels) {
  GroupOrder order = 1;
  for (const auto& level : levels) order *= level.orbit.size();
  return order;
}

bool FixesAll(const Permutation& g, const std::vector<int>& points) {
  return std::all_of(points.begin(), points.end(),
                     [&](int b) { return g(b) == b; });
}

}  // namespace

std::vector<int> Bsgs::base() const {
  std::vector<int> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

GroupOrder Bsgs::order() const { return OrbitProduct(levels_); }

std::pair<Permutation, std::size_t> Bsgs::Sift(const Permutation& g,
                                               std::size_t from_level) const {
  Permutation h = g;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const BsgsLevel& level = levels_[l];
    const int beta = h(level.base_point);
    if (!level.in_orbit(beta)) return {std::move(h), l};
    h = level.coset_rep(beta).inverse() * h;
  }
  return {std::move(h), levels_.size()};
}

bool Bsgs::Contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = Sift(g);
  return stop == levels_.size() && residue.is_identity();
}

Bsgs Bsgs::Suffix(std::size_t level) const {
  std::vector<BsgsLevel> tail(levels_.begin() + std::min(level, levels_.size()),
                              levels_.end());
  return Bsgs(degree_, std::move(tail));
}

Permutation Bsgs::RandomElement(std::mt19937_64& rng) const {
  Permutation g = Permutation::Identity(degree_);
  for (const auto& level : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
    g = g * level.transversal[pick(rng)];
  }
  return g;
}

Bsgs SchreierSims(int degree, const std::vector<Permutation>& generators,
                  const std::vector<int>& base_prefix,
                  const std::optional<GroupOrder>& known_order) {
  std::vector<Permutation> strong;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw PreconditionError("generator degree mismatch");
    }
    if (!g.is_identity() &&
        std::find(strong.begin(), strong.end(), g) == strong.end()) {
      strong.push_back(g);
    }
  }
  std::vector<int> base = base_prefix;
  for (const Permutation& g : strong) {
    if (FixesAll(g, base)) base.push_back(g.first_moved_point());
  }

  std::vector<BsgsLevel> levels(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels[i].base_point = base[i];
    const std::vector<int> earlier(base.begin(), base.begin() + i);
    for (const Permutation& g : strong) {
      if (FixesAll(g, earlier)) levels[i].generators.push_back(g);
    }
    ComputeOrbit(degree, levels[i]);
  }
  Bsgs chain(degree, levels);

  auto rebuild = [&] { chain = Bsgs(degree, levels); };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    if (known_order && OrbitProduct(levels) == *known_order) break;
    bool level_complete = true;
    const BsgsLevel& level = levels[i];
    for (std::size_t k = 0; level_complete && k < level.orbit.size(); ++k) {
      for (const Permutation& s : level.generators) {
        const int image = s(level.orbit[k]);
        Permutation schreier =
            level.coset_rep(image).inverse() * s * level.transversal[k];
        if (schreier.is_identity()) continue;
        auto [residue, stop] = chain.Sift(schreier, i + 1);
        if (residue.is_identity()) continue;

        if (stop == levels.size()) {
          BsgsLevel fresh;
          fresh.base_point = residue.first_moved_point();
          levels.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= stop; ++l) {
          levels[l].generators.push_back(residue);
          ComputeOrbit(degree, levels[l]);
        }
        rebuild();
        i = static_cast<std::ptrdiff_t>(stop);
        level_complete = false;
        break;
      }
    }
    if (level_complete) --i;
  }
  return chain;
}

struct PermGroup::Cache {
  std::once_flag once;
  std::atomic<bool> ready{false};
  Bsgs bsgs;
};

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  for (Permutation& g : generators) {
    if (g.degree() != degree) {
      throw PreconditionError("generator of degree " +
                              std::to_string(g.degree()) +
                              " in a group of degree " +
                              std::to_string(degree));
    }
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) !=
        generators_.end()) {
      continue;
    }
    generators_.push_back(std::move(g));
  }
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     Bsgs bsgs)
    : PermGroup(degree, std::move(generators)) {
  std::call_once(cache_->once, [&] {
    cache_->bsgs = std::move(bsgs);
    cache_->ready = true;
  });
}

const Bsgs& PermGroup::bsgs() const {
  std::call_once(cache_->once, [&] {
    cache_->bsgs = SchreierSims(degree_, generators_);
    cache_->ready = true;
  });
  return cache_->bsgs;
}

bool PermGroup::has_bsgs() const { return cache_->ready; }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw PreconditionError("membership test with mismatched degree");
  }
  return bsgs().Contains(p);
}

PermGroup BuildBsgs(const PermGroup& group) {
  group.bsgs();
  return group;
}

Bsgs BsgsWithPrefix(const PermGroup& group, const std::vector<int>& prefix) {
  const Bsgs& current = group.bsgs();
  const auto& gens = current.levels().empty()
                         ? group.generators()
                         : current.levels().front().generators;
  return SchreierSims(group.degree(), gens, prefix, current.order());
}

VertexSet Orbit(const PermGroup& group, int x) {
  if (x < 0 || x >= group.degree()) {
    throw PreconditionError("point " + std::to_string(x) + " out of range");
  }
  std::vector<char> seen(group.degree(), 0);
  std::vector<int> orbit{x};
  seen[x] = 1;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const Permutation& g : group.generators()) {
      const int y = g(orbit[k]);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<VertexSet> Orbits(const PermGroup& group) {
  std::vector<VertexSet> out;
  std::vector<char> seen(group.degree(), 0);
  for (int x = 0; x < group.degree(); ++x) {
    if (seen[x]) continue;
    VertexSet orbit = Orbit(group, x);
    for (int y : orbit) seen[y] = 1;
    out.push_back(std::move(orbit));
  }
  return out;
}

PermGroup PointStabilizer(const PermGroup& group, const VertexSet& s) {
  if (s.empty()) return group;
  for (Vertex v : s) {
    if (v < 0 || v >= group.degree()) {
      throw PreconditionError("point " + std::to_string(v) + " out of range");
    }
  }
  Bsgs chain = BsgsWithPrefix(group, s);
  Bsgs tail = chain.Suffix(s.size());
  std::vector<Permutation> gens;
  if (!tail.levels().empty()) gens = tail.levels().front().generators;
  return PermGroup(group.degree(), std::move(gens), std::move(tail));
}

PermGroup SetStabilizer(const PermGroup& group, const VertexSet& s) {
  for (Vertex v : s) {
    if (v < 0 || v >= group.degree()) {
      throw PreconditionError("point " + std::to_string(v) + " out of range");
    }
  }
  if (s.empty() || static_cast<int>(s.size()) == group.degree() ||
      group.is_trivial()) {
    return group;
  }
  const int degree = group.degree();
  Bsgs chain = BsgsWithPrefix(group, s);
  const PermGroup pointwise = PointStabilizer(group, s);

  std::vector<Permutation> gens = pointwise.generators();
  PermGroup found = pointwise;
  GroupOrder cosets = 0;
  WalkCosetTree(
      chain,
      [&](std::size_t, int image, const Permutation&) {
        return Contains(s, image);
      },
      [&](const Permutation& rep) {
        ++cosets;
        if (!found.contains(rep)) {
          gens.push_back(rep);
          found = PermGroup(degree, gens);
        }
        return false;
      },
      s.size());
  const GroupOrder order = cosets * pointwise.order();
  Bsgs result = SchreierSims(degree, gens, {}, order);
  return PermGroup(degree, std::move(gens), std::move(result));
}

std::vector<Permutation> Elements(const PermGroup& group,
                                  std::uint64_t limit) {
  const GroupOrder order = group.order();
  if (order > limit) {
    throw ExhaustedError("group order " + order.str() +
                         " exceeds the enumeration limit " +
                         std::to_string(limit));
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order));
  const Bsgs& chain = group.bsgs();
  WalkCosetTree(
      chain, [](std::size_t, int, const Permutation&) { return true; },
      [&](const Permutation& g) {
        out.push_back(g);
        return false;
      },
      chain.levels().size());
  return out;
}

namespace {

bool WalkFrom(
    const Bsgs& bsgs, std::size_t level, const Permutation& partial,
    const std::function<bool(std::size_t, int, const Permutation&)>& accept,
    const std::function<bool(const Permutation&)>& leaf,
    std::size_t stop_level) {
  if (level == stop_level) return leaf(partial);
  const BsgsLevel& current = bsgs.levels()[level];
  for (std::size_t k = 0; k < current.orbit.size(); ++k) {
    if (!accept(level, partial(current.orbit[k]), partial)) continue;
    if (WalkFrom(bsgs, level + 1, partial * current.transversal[k], accept,
                 leaf, stop_level)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool WalkCosetTree(
    const Bsgs& bsgs,
    const std::function<bool(std::size_t, int, const Permutation&)>& accept,
    const std::function<bool(const Permutation&)>& leaf,
    std::size_t stop_level) {
  stop_level = std::min(stop_level, bsgs.levels().size());
  return WalkFrom(bsgs, 0, Permutation::Identity(bsgs.degree()), accept, leaf,
                  stop_level);
}

}  // namespace halinkit
