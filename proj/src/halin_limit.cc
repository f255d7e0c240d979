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

#include "halinkit/halin_limit.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "halinkit/errors.h"

namespace halinkit {

EpsilonWord::EpsilonWord(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw PreconditionError("epsilon word must be nonempty");
  for (int b : bits_) {
    if (b != 0 && b != 1) {
      throw PreconditionError("epsilon word bits must be 0 or 1");
    }
  }
}

EpsilonWord EpsilonWord::Parse(const std::string& text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw PreconditionError("epsilon word must be a string of 0/1, got \"" +
                              text + "\"");
    }
    bits.push_back(c - '0');
  }
  return EpsilonWord(std::move(bits));
}

EpsilonWord EpsilonWord::FromIndex(std::uint64_t index, int length) {
  if (length < 1 || length > 63) {
    throw PreconditionError("word length out of range");
  }
  std::vector<int> bits(length);
  for (int i = 0; i < length; ++i) bits[i] = (index >> (length - 1 - i)) & 1;
  return EpsilonWord(std::move(bits));
}

std::string EpsilonWord::ToString() const {
  std::string out;
  for (int b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

const VertexSet& ConstructionState::fixed_set(int k) const {
  if (k < 0 || k > num_rounds()) {
    throw PreconditionError("no fixed set F_" + std::to_string(k));
  }
  return k == num_rounds() ? next_fixed : rounds[k].fixed;
}

int ConstructionState::exhausted_prefix() const {
  int m = 0;
  while (Contains(next_fixed, m)) ++m;
  return m;
}

namespace {

Permutation SwapSubtrees(int n, Vertex a, Vertex b) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<std::pair<Vertex, Vertex>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x >= n) continue;
    images[x] = y;
    images[y] = x;
    stack.emplace_back(2 * x + 1, 2 * y + 1);
    stack.emplace_back(2 * x + 2, 2 * y + 2);
  }
  return Permutation(std::move(images));
}

std::optional<Permutation> BinaryTreeOracle(const TruncatedFamily& family,
                                            const VertexSet& f) {
  const int n = family.graph.num_vertices();
  // Proper ancestors of fixed vertices cannot host a swap.
  std::vector<char> blocked(n, 0);
  for (Vertex v : f) {
    for (Vertex a = v; a > 0;) {
      a = (a - 1) / 2;
      if (blocked[a]) break;
      blocked[a] = 1;
    }
  }
  for (Vertex u = 1; u < n && family.depth_of[u] < family.depth; ++u) {
    if (!blocked[u]) return SwapSubtrees(n, 2 * u + 1, 2 * u + 2);
  }
  return std::nullopt;
}

std::optional<Permutation> CombOracle(const TruncatedFamily& family,
                                      const VertexSet& f) {
  const int n = family.graph.num_vertices();
  for (int i = 0; i < family.depth; ++i) {
    const Vertex a = 3 * i + 1;
    const Vertex b = 3 * i + 2;
    if (Contains(f, a) || Contains(f, b)) continue;
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::swap(images[a], images[b]);
    return Permutation(std::move(images));
  }
  return std::nullopt;
}

bool TouchesBoundary(const TruncatedFamily& family, const VertexSet& f) {
  return std::any_of(f.begin(), f.end(),
                     [&](Vertex v) { return family.on_boundary(v); });
}

void CheckWord(const ConstructionState& state, const EpsilonWord& word,
               int m) {
  if (m < 0 || m >= state.num_rounds()) {
    throw PreconditionError("alpha_" + std::to_string(m) + " needs " +
                            std::to_string(m + 1) + " rounds, state has " +
                            std::to_string(state.num_rounds()));
  }
  if (m >= word.size()) {
    throw PreconditionError("alpha_" + std::to_string(m) +
                            " needs a word of length " +
                            std::to_string(m + 1));
  }
}

}  // namespace

std::optional<Permutation> FixingOracle(const TruncatedFamily& family,
                                        const VertexSet& f) {
  for (Vertex v : f) {
    if (v < 0 || v >= family.graph.num_vertices()) {
      throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }
  }
  if (TouchesBoundary(family, f)) {
    throw PreconditionError("fixed set touches the truncation boundary");
  }
  switch (family.kind) {
    case FamilyKind::kBinaryTree:
      return BinaryTreeOracle(family, f);
    case FamilyKind::kComb:
      return CombOracle(family, f);
    case FamilyKind::kCustom:
      break;
  }
  throw PreconditionError("no fixing oracle for custom families");
}

ConstructionState RunConstruction(const TruncatedFamily& family, int rounds) {
  if (rounds < 1) {
    throw PreconditionError("the construction needs at least one round");
  }
  ConstructionState state;
  state.family = family;
  state.requested_rounds = rounds;
  const int n = family.graph.num_vertices();

  VertexSet fixed{0};
  for (int k = 0; k < rounds; ++k) {
    if (TouchesBoundary(family, fixed)) {
      state.exhausted = true;
      state.exhaustion_reason = "F_" + std::to_string(k) +
                                " reaches the truncation boundary";
      break;
    }
    std::optional<Permutation> phi = FixingOracle(family, fixed);
    if (!phi) {
      state.exhausted = true;
      state.exhaustion_reason =
          "no automorphism fixes F_" + std::to_string(k) + " pointwise";
      break;
    }
    const Vertex x = phi->first_moved_point();
    state.rounds.push_back({fixed, *phi, x});

    // Images of F_k under every alpha_k^e: apply phi_k first, phi_0 last.
    VertexSet forward = fixed;
    for (int j = k; j >= 0; --j) {
      forward = Union(forward, state.rounds[j].phi.apply(forward));
    }
    // Under every alpha_k^-e: phi_0^-1 first, phi_k^-1 last.
    VertexSet backward = fixed;
    for (int j = 0; j <= k; ++j) {
      backward = Union(backward, state.rounds[j].phi.inverse().apply(backward));
    }
    std::vector<Vertex> extra{x};
    if (k + 1 < n) extra.push_back(k + 1);
    fixed = Union(Union(forward, backward), MakeVertexSet(std::move(extra)));
    if (k + 1 >= n) {
      state.exhausted = true;
      state.exhaustion_reason = "enumeration ran out of vertices";
      state.next_fixed = fixed;
      return state;
    }
  }
  state.next_fixed = fixed;
  return state;
}

int RequiredTreeDepth(int rounds) {
  if (rounds < 1) {
    throw PreconditionError("the construction needs at least one round");
  }
  // Every four rounds of minimal fixed sets consume one more tree level.
  return rounds == 1 ? 2 : rounds / 4 + 3;
}

Permutation AlphaProduct(const ConstructionState& state,
                         const EpsilonWord& word, int m) {
  CheckWord(state, word, m);
  Permutation out = Permutation::Identity(state.family.graph.num_vertices());
  for (int i = 0; i <= m; ++i) {
    if (word[i]) out = out * state.rounds[i].phi;
  }
  return out;
}

Permutation AlphaInverseProduct(const ConstructionState& state,
                                const EpsilonWord& word, int m) {
  CheckWord(state, word, m);
  Permutation out = Permutation::Identity(state.family.graph.num_vertices());
  for (int i = m; i >= 0; --i) {
    if (word[i]) out = out * state.rounds[i].phi.inverse();
  }
  return out;
}

std::vector<Permutation> AlphaSequence(const ConstructionState& state,
                                       const EpsilonWord& word) {
  const int limit = std::min(word.size(), state.num_rounds());
  std::vector<Permutation> out{
      Permutation::Identity(state.family.graph.num_vertices())};
  for (int m = 0; m < limit; ++m) {
    out.push_back(word[m] ? out.back() * state.rounds[m].phi : out.back());
  }
  return out;
}

Vertex Alpha(const ConstructionState& state, const EpsilonWord& word,
             Vertex v) {
  const int limit = std::min(word.size(), state.num_rounds());
  if (limit == 0) throw PreconditionError("state has no rounds");
  if (v >= 0 && v < limit) return AlphaProduct(state, word, v)(v);
  if (Contains(state.fixed_set(limit), v)) {
    return AlphaProduct(state, word, limit - 1)(v);
  }
  throw PreconditionError("alpha(v_" + std::to_string(v) +
                          ") is not determined by " + std::to_string(limit) +
                          " rounds");
}

DistinctnessReport VerifyDistinctness(const ConstructionState& state, int k,
                                      bool keep_witnesses) {
  if (k < 1 || k > state.num_rounds()) {
    throw PreconditionError("distinctness check needs 1 <= K <= rounds");
  }
  if (k > 20) throw PreconditionError("too many words to compare");
  DistinctnessReport report;
  report.word_length = k;
  report.num_words = std::uint64_t{1} << k;
  report.num_pairs = report.num_words * (report.num_words - 1) / 2;

  // The least vertex of F_{j+1} moved by phi_j, per j.
  std::vector<Vertex> mover(k, -1);
  for (int j = 0; j < k; ++j) {
    for (Vertex v : state.fixed_set(j + 1)) {
      if (state.rounds[j].phi(v) != v) {
        mover[j] = v;
        break;
      }
    }
  }
  std::vector<Permutation> limits;
  limits.reserve(report.num_words);
  for (std::uint64_t w = 0; w < report.num_words; ++w) {
    limits.push_back(AlphaProduct(state, EpsilonWord::FromIndex(w, k), k - 1));
  }
  for (std::uint64_t a = 0; a < report.num_words; ++a) {
    for (std::uint64_t b = a + 1; b < report.num_words; ++b) {
      PairWitness pw;
      pw.first = a;
      pw.second = b;
      // e_0 is the most significant bit of the index.
      const std::uint64_t diff = a ^ b;
      pw.differing_index = k - 1 - (63 - std::countl_zero(diff));
      pw.vertex = mover[pw.differing_index];
      if (pw.vertex >= 0) {
        pw.image_first = limits[a](pw.vertex);
        pw.image_second = limits[b](pw.vertex);
      }
      if (pw.witnessed()) ++report.num_witnessed;
      if (keep_witnesses) report.witnesses.push_back(pw);
    }
  }
  return report;
}

bool VerifyFinitary(const ConstructionState& state,
                    const std::vector<Vertex>& tuple,
                    const EpsilonWord& word) {
  if (tuple.empty()) return true;
  const Vertex top = *std::max_element(tuple.begin(), tuple.end());
  if (top < 0) throw PreconditionError("negative vertex in tuple");
  if (top + 1 >= state.num_rounds()) {
    throw PreconditionError("tuple reaches v_" + std::to_string(top) +
                            "; need more than " + std::to_string(top + 1) +
                            " rounds");
  }
  if (word.size() < state.num_rounds()) {
    throw PreconditionError("word shorter than the number of rounds");
  }
  std::vector<Vertex> limit;
  for (Vertex w : tuple) limit.push_back(Alpha(state, word, w));
  for (int m = top + 1; m < state.num_rounds(); ++m) {
    const Permutation alpha_m = AlphaProduct(state, word, m);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (alpha_m(tuple[i]) != limit[i]) return false;
    }
  }
  return true;
}

std::vector<Vertex> ImageTable(const ConstructionState& state,
                               const EpsilonWord& word) {
  const Permutation alpha =
      AlphaProduct(state, word, state.num_rounds() - 1);
  std::vector<Vertex> table;
  for (Vertex v : state.next_fixed) table.push_back(alpha(v));
  return table;
}

std::vector<std::string> CheckConstruction(const ConstructionState& state) {
  std::vector<std::string> problems;
  const Graph& g = state.family.graph;
  const int rounds = state.num_rounds();
  for (int k = 0; k <= rounds; ++k) {
    const VertexSet& f = state.fixed_set(k);
    if (k < g.num_vertices() && !Contains(f, k)) {
      problems.push_back("v_" + std::to_string(k) + " not in F_" +
                         std::to_string(k));
    }
    if (k > 0 && !IsSubset(state.fixed_set(k - 1), f)) {
      problems.push_back("F_" + std::to_string(k - 1) + " not inside F_" +
                         std::to_string(k));
    }
  }
  for (int k = 0; k < rounds; ++k) {
    const ConstructionRound& r = state.rounds[k];
    const std::string tag = " (round " + std::to_string(k) + ")";
    if (!IsAutomorphism(g, r.phi)) problems.push_back("phi is not an automorphism" + tag);
    if (!r.phi.fixes_pointwise(r.fixed)) problems.push_back("phi moves a vertex of F" + tag);
    if (r.phi(r.moved) == r.moved) problems.push_back("x is fixed by phi" + tag);
    if (r.phi.first_moved_point() != r.moved) problems.push_back("x is not the least moved vertex" + tag);

    // Recompute the required union by enumerating all 2^(k+1) words.
    if (k + 1 > 20) continue;
    const VertexSet& next = state.fixed_set(k + 1);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << (k + 1)); ++w) {
      const EpsilonWord word = EpsilonWord::FromIndex(w, k + 1);
      const Permutation fwd = AlphaProduct(state, word, k);
      const Permutation bwd = AlphaInverseProduct(state, word, k);
      if (!IsSubset(fwd.apply(r.fixed), next) ||
          !IsSubset(bwd.apply(r.fixed), next)) {
        problems.push_back("F_" + std::to_string(k + 1) +
                           " misses an image of F_" + std::to_string(k) +
                           " under word " + word.ToString());
        break;
      }
    }
    if (!Contains(next, r.moved)) problems.push_back("x not in the next set" + tag);
  }
  return problems;
}

}  // namespace halinkit
