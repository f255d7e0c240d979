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

#include "halinkit/graph.h"

#include <algorithm>
#include <iterator>
#include <string>

#include "halinkit/errors.h"

namespace halinkit {

VertexSet MakeVertexSet(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool Contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet Union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool IsSubset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw PreconditionError("label count " + std::to_string(labels_.size()) +
                            " does not match vertex count " +
                            std::to_string(n));
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "} out of range for n=" +
                              std::to_string(n));
    }
    if (u == v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw PreconditionError("duplicate edge {" + std::to_string(dup->first) +
                            "," + std::to_string(dup->second) + "}");
  }
  edges_ = std::move(edges);

  std::vector<int> degree(n, 0);
  for (const auto& [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v],
              adjacency_.begin() + offsets_[v + 1]);
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  // Search the shorter list.
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool IsConnected(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph Relabel(const Graph& g, std::span<const int> relabel) {
  const int n = g.num_vertices();
  if (static_cast<int>(relabel.size()) != n) {
    throw PreconditionError("relabeling has wrong size");
  }
  std::vector<char> hit(n, 0);
  for (int image : relabel) {
    if (image < 0 || image >= n || hit[image]) {
      throw PreconditionError("relabeling is not a bijection");
    }
    hit[image] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(relabel[u], relabel[v]);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(n);
    for (int v = 0; v < n; ++v) labels[relabel[v]] = g.labels()[v];
  }
  return Graph(n, std::move(edges), std::move(labels));
}

std::string FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kBinaryTree:
      return "binary-tree";
    case FamilyKind::kComb:
      return "comb";
    case FamilyKind::kCustom:
      return "custom";
  }
  return "custom";
}

}  // namespace halinkit
