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

#ifndef HALINKIT_AUTOMORPHISMS_H_
#define HALINKIT_AUTOMORPHISMS_H_

#include <vector>

#include "halinkit/graph.h"
#include "halinkit/perm_group.h"

namespace halinkit {

// Ordered partition of {0..n-1}. Cells occupy contiguous ranges of an
// element array; a cell is identified by the position where it starts.
class ColoredPartition {
 public:
  ColoredPartition() = default;
  static ColoredPartition Unit(int n);
  // Throws PreconditionError unless `cells` partition {0..n-1}.
  static ColoredPartition FromCells(int n,
                                    const std::vector<VertexSet>& cells);

  int size() const { return static_cast<int>(elements_.size()); }
  int num_cells() const { return num_cells_; }
  bool discrete() const { return num_cells_ == size(); }
  // Cells in order, each sorted ascending.
  std::vector<VertexSet> cells() const;
  // Start position of every cell, ascending. Two nodes of the search tree
  // related by an automorphism have equal shapes.
  std::vector<int> shape() const;
  // Vertex order of a discrete partition.
  const std::vector<Vertex>& elements() const { return elements_; }
  int cell_start_of(Vertex v) const { return cell_of_[v]; }
  int cell_end(int start) const { return cell_end_[start]; }

  // Splits v out of its cell as a singleton placed first. Returns the start
  // of the singleton cell.
  int Individualize(Vertex v);

  friend bool operator==(const ColoredPartition& a,
                         const ColoredPartition& b) {
    return a.cells() == b.cells();
  }

 private:
  friend class Refiner;
  std::vector<Vertex> elements_;
  std::vector<int> position_;  // vertex -> index into elements_
  std::vector<int> cell_of_;   // vertex -> start of its cell
  std::vector<int> cell_end_;  // start -> one past the end; junk elsewhere
  int num_cells_ = 0;
};

// Coarsest equitable refinement of p: every vertex of a cell has the same
// number of neighbours in every cell. Cells split in place, fragments
// ordered by ascending neighbour count, so the result depends only on the
// isomorphism type of (g, p).
ColoredPartition Refine(const Graph& g, const ColoredPartition& p);

// Equitability check, independent of Refine.
bool IsEquitable(const Graph& g, const ColoredPartition& p);

// Generators of Aut(g) by individualization-refinement. Targets the first
// largest non-singleton cell, tries its vertices in ascending order, and
// prunes with automorphisms found against the first leaf.
PermGroup AutomorphismGroup(const Graph& g);

}  // namespace halinkit

#endif  // HALINKIT_AUTOMORPHISMS_H_
