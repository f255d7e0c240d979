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

#include "halinkit/automorphisms.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "halinkit/errors.h"

namespace halinkit {

ColoredPartition ColoredPartition::Unit(int n) {
  ColoredPartition p;
  p.elements_.resize(n);
  std::iota(p.elements_.begin(), p.elements_.end(), 0);
  p.position_ = p.elements_;
  p.cell_of_.assign(n, 0);
  p.cell_end_.assign(n + 1, 0);
  p.cell_end_[0] = n;
  p.num_cells_ = n > 0 ? 1 : 0;
  return p;
}

ColoredPartition ColoredPartition::FromCells(
    int n, const std::vector<VertexSet>& cells) {
  ColoredPartition p;
  p.position_.assign(n, -1);
  p.cell_of_.assign(n, 0);
  p.cell_end_.assign(n + 1, 0);
  for (const VertexSet& cell : cells) {
    if (cell.empty()) throw PreconditionError("empty cell in partition");
    const int start = static_cast<int>(p.elements_.size());
    for (Vertex v : cell) {
      if (v < 0 || v >= n || p.position_[v] >= 0) {
        throw PreconditionError("cells do not partition the vertex set");
      }
      p.position_[v] = static_cast<int>(p.elements_.size());
      p.cell_of_[v] = start;
      p.elements_.push_back(v);
    }
    p.cell_end_[start] = static_cast<int>(p.elements_.size());
    ++p.num_cells_;
  }
  if (static_cast<int>(p.elements_.size()) != n) {
    throw PreconditionError("cells do not cover the vertex set");
  }
  return p;
}

std::vector<VertexSet> ColoredPartition::cells() const {
  std::vector<VertexSet> out;
  for (int start = 0; start < size(); start = cell_end_[start]) {
    VertexSet cell(elements_.begin() + start,
                   elements_.begin() + cell_end_[start]);
    std::sort(cell.begin(), cell.end());
    out.push_back(std::move(cell));
  }
  return out;
}

std::vector<int> ColoredPartition::shape() const {
  std::vector<int> out;
  for (int start = 0; start < size(); start = cell_end_[start]) {
    out.push_back(start);
  }
  return out;
}

int ColoredPartition::Individualize(Vertex v) {
  const int start = cell_of_[v];
  const int end = cell_end_[start];
  if (end - start == 1) return start;
  // Swap v to the front of its cell.
  const int pos = position_[v];
  const Vertex front = elements_[start];
  std::swap(elements_[start], elements_[pos]);
  position_[front] = pos;
  position_[v] = start;
  // Keep the remainder sorted so vertex order inside cells stays canonical.
  std::sort(elements_.begin() + start + 1, elements_.begin() + end);
  for (int i = start + 1; i < end; ++i) {
    position_[elements_[i]] = i;
    cell_of_[elements_[i]] = start + 1;
  }
  cell_end_[start] = start + 1;
  cell_end_[start + 1] = end;
  ++num_cells_;
  return start;
}

class Refiner {
 public:
  Refiner(const Graph& g, ColoredPartition& p)
      : g_(g), p_(p), count_(g.num_vertices(), 0),
        queued_(g.num_vertices() + 1, 0) {}

  void Enqueue(int start) {
    if (!queued_[start]) {
      queued_[start] = 1;
      queue_.push_back(start);
    }
  }

  void EnqueueAll() {
    for (int start = 0; start < p_.size(); start = p_.cell_end_[start]) {
      Enqueue(start);
    }
  }

  void Run() {
    std::vector<Vertex> touched;
    std::vector<int> touched_cells;
    while (!queue_.empty() && !p_.discrete()) {
      const int splitter = queue_.front();
      queue_.pop_front();
      queued_[splitter] = 0;

      touched.clear();
      for (int i = splitter; i < p_.cell_end_[splitter]; ++i) {
        for (Vertex u : g_.neighbors(p_.elements_[i])) {
          if (count_[u]++ == 0) touched.push_back(u);
        }
      }
      touched_cells.clear();
      for (Vertex u : touched) touched_cells.push_back(p_.cell_of_[u]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(
          std::unique(touched_cells.begin(), touched_cells.end()),
          touched_cells.end());
      for (int start : touched_cells) SplitCell(start);
      for (Vertex u : touched) count_[u] = 0;
    }
  }

 private:
  void SplitCell(int start) {
    const int end = p_.cell_end_[start];
    if (end - start == 1) return;
    auto first = p_.elements_.begin() + start;
    auto last = p_.elements_.begin() + end;
    std::sort(first, last, [&](Vertex a, Vertex b) {
      return std::pair(count_[a], a) < std::pair(count_[b], b);
    });
    if (count_[*first] == count_[*(last - 1)]) return;
    int fragment = start;
    for (int i = start; i < end; ++i) {
      const Vertex v = p_.elements_[i];
      p_.position_[v] = i;
      if (i > start && count_[v] != count_[p_.elements_[i - 1]]) {
        p_.cell_end_[fragment] = i;
        fragment = i;
        ++p_.num_cells_;
      }
      p_.cell_of_[v] = fragment;
    }
    p_.cell_end_[fragment] = end;
    for (int f = start; f < end; f = p_.cell_end_[f]) Enqueue(f);
  }

  const Graph& g_;
  ColoredPartition& p_;
  std::vector<int> count_;
  std::vector<char> queued_;
  std::deque<int> queue_;
};

ColoredPartition Refine(const Graph& g, const ColoredPartition& p) {
  if (p.size() != g.num_vertices()) {
    throw PreconditionError("partition size does not match graph");
  }
  ColoredPartition out = p;
  Refiner refiner(g, out);
  refiner.EnqueueAll();
  refiner.Run();
  return out;
}

bool IsEquitable(const Graph& g, const ColoredPartition& p) {
  const auto cells = p.cells();
  std::vector<int> cell_id(g.num_vertices());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (Vertex v : cells[c]) cell_id[v] = static_cast<int>(c);
  }
  for (const VertexSet& cell : cells) {
    std::vector<int> reference;
    for (Vertex v : cell) {
      std::vector<int> counts(cells.size(), 0);
      for (Vertex w : g.neighbors(v)) ++counts[cell_id[w]];
      if (reference.empty()) {
        reference = std::move(counts);
      } else if (counts != reference) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Union-find over points, merged along generator cycles.
class OrbitPartition {
 public:
  explicit OrbitPartition(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Merge(const Permutation& g) {
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x) {
      int a = Find(x);
      int b = Find(g(x));
      if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<int> parent_;
};

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g)
      : g_(g), orbits_(g.num_vertices()) {}

  std::vector<Permutation> Run() {
    ColoredPartition node = Refine(g_, ColoredPartition::Unit(g_.num_vertices()));
    first_path_.push_back(node);
    while (!node.discrete()) {
      node = Child(node, TargetCell(node).front());
      first_path_.push_back(node);
    }
    first_leaf_ = node.elements();

    for (int level = static_cast<int>(first_path_.size()) - 2; level >= 0;
         --level) {
      const ColoredPartition& parent = first_path_[level];
      const VertexSet cell = TargetCell(parent);
      std::vector<int> processed{cell.front()};
      for (std::size_t k = 1; k < cell.size(); ++k) {
        const Vertex w = cell[k];
        const int root = orbits_.Find(w);
        const bool seen = std::any_of(
            processed.begin(), processed.end(),
            [&](int p) { return orbits_.Find(p) == root; });
        if (seen) continue;
        processed.push_back(w);
        ColoredPartition child = Child(parent, w);
        if (child.shape() != first_path_[level + 1].shape()) continue;
        if (auto found = Explore(child, level + 1)) {
          orbits_.Merge(*found);
          generators_.push_back(std::move(*found));
        }
      }
    }
    return std::move(generators_);
  }

 private:
  // First largest non-singleton cell, sorted ascending.
  VertexSet TargetCell(const ColoredPartition& p) const {
    int best_start = -1;
    int best_size = 1;
    for (int start = 0; start < p.size(); start = p.cell_end(start)) {
      const int size = p.cell_end(start) - start;
      if (size > best_size) {
        best_size = size;
        best_start = start;
      }
    }
    VertexSet cell(p.elements().begin() + best_start,
                   p.elements().begin() + best_start + best_size);
    std::sort(cell.begin(), cell.end());
    return cell;
  }

  ColoredPartition Child(const ColoredPartition& parent, Vertex v) const {
    ColoredPartition child = parent;
    const int start = child.Individualize(v);
    Refiner refiner(g_, child);
    refiner.Enqueue(start);
    refiner.Enqueue(start + 1);
    refiner.Run();
    return child;
  }

  std::optional<Permutation> Explore(const ColoredPartition& node,
                                     std::size_t level) {
    if (node.discrete()) {
      std::vector<int> images(g_.num_vertices());
      for (std::size_t i = 0; i < first_leaf_.size(); ++i) {
        images[first_leaf_[i]] = node.elements()[i];
      }
      Permutation candidate(std::move(images));
      if (IsAutomorphism(g_, candidate)) return candidate;
      return std::nullopt;
    }
    for (Vertex w : TargetCell(node)) {
      ColoredPartition child = Child(node, w);
      if (child.shape() != first_path_[level + 1].shape()) continue;
      if (auto found = Explore(child, level + 1)) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  OrbitPartition orbits_;
  std::vector<ColoredPartition> first_path_;
  std::vector<Vertex> first_leaf_;
  std::vector<Permutation> generators_;
};

}  // namespace

PermGroup AutomorphismGroup(const Graph& g) {
  if (g.num_vertices() == 0) return PermGroup(0);
  AutomorphismSearch search(g);
  return PermGroup(g.num_vertices(), search.Run());
}

}  // namespace halinkit
