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

#ifndef HALINKIT_GRAPH_H_
#define HALINKIT_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace halinkit {

// Vertex k stands for the k-th vertex of the fixed enumeration v_0, v_1, ...
using Vertex = int;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

// Sorts and deduplicates.
VertexSet MakeVertexSet(std::vector<Vertex> vertices);
bool Contains(const VertexSet& set, Vertex v);
VertexSet Union(const VertexSet& a, const VertexSet& b);
bool IsSubset(const VertexSet& a, const VertexSet& b);

using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
//
// Edges are stored normalized (first < second) and sorted. Labels are
// optional provenance tags and do not take part in equality.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, duplicate edges, out-of-range
  // endpoints, or a label vector whose size is not n.
  Graph(int n, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  // CSR adjacency, each neighbor list sorted.
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
};

bool IsConnected(const Graph& g);

// Graph obtained by renaming vertex v to relabel[v]; relabel must be a
// bijection on 0..n-1. Labels travel with their vertices.
Graph Relabel(const Graph& g, std::span<const int> relabel);

// A finite depth-D prefix of an infinite graph.
enum class FamilyKind { kBinaryTree, kComb, kCustom };

struct TruncatedFamily {
  FamilyKind kind = FamilyKind::kCustom;
  int depth = 0;
  Graph graph;
  // Vertices whose label records depth == `depth`.
  VertexSet boundary;
  // depth_of[v] for every vertex.
  std::vector<int> depth_of;

  bool on_boundary(Vertex v) const { return Contains(boundary, v); }
};

std::string FamilyKindName(FamilyKind kind);

}  // namespace halinkit

#endif  // HALINKIT_GRAPH_H_
