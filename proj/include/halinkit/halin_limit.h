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

// Finite simulation of the construction of continuum many automorphisms of
// a countable graph without a finite base.
//
// Round k records a finite set F_k, an automorphism phi_k fixing F_k
// pointwise, and a vertex x_k moved by phi_k. For a 0/1 word e,
//
//   alpha_k^e  = phi_0^e0 * phi_1^e1 * ... * phi_k^ek
//   alpha_k^-e = phi_k^-ek * ... * phi_0^-e0
//
// (right-to-left composition), and the next set is the smallest allowed:
//
//   F_{k+1} = alpha_k^E(F_k) + alpha_k^-E(F_k) + {x_k, v_{k+1}},
//
// with alpha_k^E ranging over all words. F_0 = {v_0}. The limit map is
// alpha^e(v_k) = alpha_k^e(v_k). Vertex k is v_k.

#ifndef HALINKIT_HALIN_LIMIT_H_
#define HALINKIT_HALIN_LIMIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halinkit/graph.h"
#include "halinkit/permutation.h"

namespace halinkit {

// Finite prefix (e_0, ..., e_{K-1}) of an infinite 0/1 sequence.
class EpsilonWord {
 public:
  // Throws PreconditionError if empty or a bit is not 0/1.
  explicit EpsilonWord(std::vector<int> bits);
  // From a string of '0'/'1' characters.
  static EpsilonWord Parse(const std::string& text);
  // The index-th word of length `length` in lexicographic order (e_0 is the
  // most significant bit).
  static EpsilonWord FromIndex(std::uint64_t index, int length);

  int size() const { return static_cast<int>(bits_.size()); }
  int operator[](int i) const { return bits_[i]; }
  std::string ToString() const;

 private:
  std::vector<int> bits_;
};

struct ConstructionRound {
  VertexSet fixed;  // F_k
  Permutation phi;  // phi_k
  Vertex moved;     // x_k: least vertex moved by phi_k
};

struct ConstructionState {
  TruncatedFamily family;
  int requested_rounds = 0;
  std::vector<ConstructionRound> rounds;
  // F_K for K = rounds.size(): the set the next round would have to fix.
  VertexSet next_fixed;
  bool exhausted = false;
  std::string exhaustion_reason;

  int num_rounds() const { return static_cast<int>(rounds.size()); }
  // F_k for 0 <= k <= num_rounds().
  const VertexSet& fixed_set(int k) const;
  // Largest m with v_0..v_{m-1} all in the last fixed set.
  int exhausted_prefix() const;
};

// An automorphism of the truncated graph, nontrivial and fixing f
// pointwise, that is also the restriction of an automorphism of the infinite
// graph; nullopt ("exhausted") if the truncation has no room for one.
//
//   binary tree: swap the two child subtrees of the least-index non-root
//                vertex u of depth < D none of whose descendants is in f.
//   comb:        swap the two teeth of the least spine vertex s_i, i < D,
//                whose teeth are both outside f.
//
// Throws PreconditionError if f meets the boundary or for custom families.
std::optional<Permutation> FixingOracle(const TruncatedFamily& family,
                                        const VertexSet& f);

// Runs up to `rounds` rounds. Stops early, with exhausted set, when the
// fixed set reaches the boundary or the oracle finds no automorphism.
// Throws PreconditionError for rounds < 1.
ConstructionState RunConstruction(const TruncatedFamily& family, int rounds);

// Smallest binary-tree depth at which RunConstruction completes `rounds`
// rounds: 2 for one round, floor(rounds / 4) + 3 otherwise.
int RequiredTreeDepth(int rounds);

// alpha_m^e. Requires m < num_rounds() and m < word.size().
Permutation AlphaProduct(const ConstructionState& state,
                         const EpsilonWord& word, int m);
// alpha_m^-e.
Permutation AlphaInverseProduct(const ConstructionState& state,
                                const EpsilonWord& word, int m);

// (id, alpha_0^e, ..., alpha_{K-1}^e) with K = min(word.size(),
// num_rounds()): the partial products, starting from the empty one.
std::vector<Permutation> AlphaSequence(const ConstructionState& state,
                                       const EpsilonWord& word);

// alpha^e(v). With L = min(word.size(), num_rounds()): v_k for k < L is
// evaluated as alpha_k^e(v_k); other vertices of F_L as alpha_{L-1}^e(v),
// which is already the limit value. Throws PreconditionError otherwise.
Vertex Alpha(const ConstructionState& state, const EpsilonWord& word,
             Vertex v);

struct PairWitness {
  std::uint64_t first = 0;   // word indices, first < second
  std::uint64_t second = 0;
  int differing_index = 0;   // least k with e_k != p_k
  Vertex vertex = -1;        // v in F_{k+1} moved by phi_k, or -1
  Vertex image_first = -1;
  Vertex image_second = -1;
  bool witnessed() const { return vertex >= 0 && image_first != image_second; }
};

struct DistinctnessReport {
  int word_length = 0;
  std::uint64_t num_words = 0;
  std::uint64_t num_pairs = 0;
  std::uint64_t num_witnessed = 0;
  std::vector<PairWitness> witnesses;
  bool all_witnessed() const { return num_witnessed == num_pairs; }
};

// For each pair of distinct words of length k, takes the first differing
// index j, the least v in F_{j+1} moved by phi_j, and compares alpha^e(v)
// with alpha^p(v). Requires state.num_rounds() >= k. Witness lists are kept
// only when `keep_witnesses` is set.
DistinctnessReport VerifyDistinctness(const ConstructionState& state, int k,
                                      bool keep_witnesses = true);

// Checks alpha^e(t) == alpha_m^e(t) for every m with N < m < num_rounds(),
// where N is the largest index in the tuple. Throws PreconditionError unless
// N + 1 < num_rounds() and word.size() >= num_rounds().
bool VerifyFinitary(const ConstructionState& state,
                    const std::vector<Vertex>& tuple, const EpsilonWord& word);

// alpha_{K-1}^e restricted to F_K, K = num_rounds(): the limit map on the
// region the construction has fixed.
std::vector<Vertex> ImageTable(const ConstructionState& state,
                               const EpsilonWord& word);

// Mechanical check of the round invariants; returns human-readable
// violations (empty when all hold).
std::vector<std::string> CheckConstruction(const ConstructionState& state);

}  // namespace halinkit

#endif  // HALINKIT_HALIN_LIMIT_H_
