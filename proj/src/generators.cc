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

#include "halinkit/generators.h"

#include <random>
#include <string>
#include <vector>

#include "halinkit/errors.h"

namespace halinkit {
namespace {

void RequireAtLeast(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw PreconditionError(std::string(what) + " must be >= " +
                            std::to_string(minimum) + ", got " +
                            std::to_string(value));
  }
}

std::string DepthLabel(int d) { return "depth=" + std::to_string(d); }

}  // namespace

Graph PathGraph(int n) {
  RequireAtLeast(n, 1, "path length");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph CycleGraph(int n) {
  RequireAtLeast(n, 3, "cycle length");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph CompleteGraph(int n) {
  RequireAtLeast(n, 1, "complete graph order");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph CompleteBipartiteGraph(int a, int b) {
  RequireAtLeast(a, 1, "bipartite part size");
  RequireAtLeast(b, 1, "bipartite part size");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, std::move(edges));
}

Graph PetersenGraph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

TruncatedFamily BinaryTree(int depth) {
  RequireAtLeast(depth, 1, "tree depth");
  if (depth > 24) throw PreconditionError("tree depth too large");
  const int n = (1 << (depth + 1)) - 1;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<std::string> labels(n);
  std::vector<int> depth_of(n);
  for (int v = 0; v < n; ++v) {
    if (v > 0) {
      edges.emplace_back((v - 1) / 2, v);
      depth_of[v] = depth_of[(v - 1) / 2] + 1;
    }
    labels[v] = DepthLabel(depth_of[v]);
  }
  TruncatedFamily family;
  family.kind = FamilyKind::kBinaryTree;
  family.depth = depth;
  for (int v = (1 << depth) - 1; v < n; ++v) family.boundary.push_back(v);
  family.depth_of = std::move(depth_of);
  family.graph = Graph(n, std::move(edges), std::move(labels));
  return family;
}

TruncatedFamily Comb(int depth) {
  RequireAtLeast(depth, 1, "comb depth");
  const int n = 3 * (depth + 1);
  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  std::vector<int> depth_of(n);
  for (int i = 0; i <= depth; ++i) {
    const int spine = 3 * i;
    if (i > 0) edges.emplace_back(spine - 3, spine);
    edges.emplace_back(spine, spine + 1);
    edges.emplace_back(spine, spine + 2);
    for (int k = 0; k < 3; ++k) {
      labels[spine + k] = DepthLabel(i);
      depth_of[spine + k] = i;
    }
  }
  TruncatedFamily family;
  family.kind = FamilyKind::kComb;
  family.depth = depth;
  family.boundary = {3 * depth, 3 * depth + 1, 3 * depth + 2};
  family.depth_of = std::move(depth_of);
  family.graph = Graph(n, std::move(edges), std::move(labels));
  return family;
}

Graph RandomConnectedGraph(int n, double edge_probability,
                           std::uint64_t seed) {
  RequireAtLeast(n, 1, "random graph order");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  while (true) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng)) edges.emplace_back(i, j);
      }
    }
    Graph g(n, std::move(edges));
    if (IsConnected(g)) return g;
  }
}

Graph GenerateByName(const std::string& family, int size) {
  if (family == "path") return PathGraph(size);
  if (family == "cycle") return CycleGraph(size);
  if (family == "complete") return CompleteGraph(size);
  if (family == "petersen") return PetersenGraph();
  if (family == "binary-tree" || family == "binary_tree") {
    return BinaryTree(size).graph;
  }
  if (family == "comb") return Comb(size).graph;
  throw PreconditionError("unknown family \"" + family + "\"");
}

}  // namespace halinkit
