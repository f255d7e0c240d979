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

#include "halinkit/permutation.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "halinkit/errors.h"

namespace halinkit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> hit(n, 0);
  for (int image : images_) {
    if (image < 0 || image >= n || hit[image]) {
      throw PreconditionError("image array is not a bijection on 0.." +
                              std::to_string(n - 1));
    }
    hit[image] = 1;
  }
}

Permutation Permutation::Identity(int degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Permutation Permutation::FromCycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      if (from < 0 || from >= degree || used[from]) {
        throw PreconditionError("cycles are not disjoint or out of range");
      }
      used[from] = 1;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) inv.images_[images_[i]] = i;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::motion() const {
  int moved = 0;
  for (int i = 0; i < degree(); ++i) moved += images_[i] != i;
  return moved;
}

int Permutation::first_moved_point() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return i;
  }
  return -1;
}

VertexSet Permutation::apply(const VertexSet& set) const {
  VertexSet out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(images_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool Permutation::fixes_pointwise(const VertexSet& set) const {
  return std::all_of(set.begin(), set.end(),
                     [&](Vertex v) { return images_[v] == v; });
}

bool Permutation::stabilizes(const VertexSet& set) const {
  return std::all_of(set.begin(), set.end(),
                     [&](Vertex v) { return Contains(set, images_[v]); });
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw PreconditionError("composing permutations of different degree");
  }
  Permutation out;
  out.images_.resize(a.images_.size());
  for (int i = 0; i < a.degree(); ++i) out.images_[i] = a.images_[b.images_[i]];
  return out;
}

std::string Permutation::ToCycleString() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image array.
  std::uint64_t h = 14695981039346656037ull;
  for (int image : p.images()) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(image));
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool IsAutomorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.num_vertices()) return false;
  // A bijection mapping every edge onto an edge maps the finite edge set onto
  // itself, hence also non-edges onto non-edges.
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

}  // namespace halinkit
