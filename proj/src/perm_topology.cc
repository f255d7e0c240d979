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


#include "halinkit/perm_topology.h"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "halinkit/errors.h"

namespace halinkit {

Exhaustion::Exhaustion(int degree, std::vector<VertexSet> sets)
    : degree_(degree), sets_(std::move(sets)) {
  if (sets_.empty() || sets_.front().empty()) {
    throw PreconditionError("exhaustion needs a nonempty X_0");
  }
  first_index_.assign(degree_, -1);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    VertexSet& s = sets_[i];
    s = MakeVertexSet(std::move(s));
    for (Vertex v : s) {
      if (v < 0 || v >= degree_) {
        throw PreconditionError("exhaustion vertex " + std::to_string(v) +
                                " out of range");
      }
      if (first_index_[v] < 0) first_index_[v] = static_cast<int>(i);
    }
    if (i > 0 && (sets_[i - 1].size() >= s.size() ||
                  !IsSubset(sets_[i - 1], s))) {
      throw PreconditionError("exhaustion is not strictly nested at X_" +
                              std::to_string(i));
    }
  }
}

Exhaustion Exhaustion::Prefixes(int degree) {
  std::vector<VertexSet> sets;
  VertexSet s;
  for (int i = 0; i < degree; ++i) {
    s.push_back(i);
    sets.push_back(s);
  }
  return Exhaustion(degree, std::move(sets));
}

Exhaustion Exhaustion::FromConstruction(const ConstructionState& state) {
  std::vector<VertexSet> sets;
  for (int k = 0; k <= state.num_rounds(); ++k) sets.push_back(state.fixed_set(k));
  return Exhaustion(state.family.graph.num_vertices(), std::move(sets));
}

std::optional<int> Confluent(const Exhaustion& e, const Permutation& a,
                             const Permutation& b) {
  if (a.degree() != e.degree() || b.degree() != e.degree()) {
    throw PreconditionError("permutation degree does not match exhaustion");
  }
  std::optional<int> best;
  for (int x = 0; x < e.degree(); ++x) {
    const int i = e.first_index(x);
    if (i < 0 || a(x) == b(x)) continue;
    if (!best || i < *best) best = i;
  }
  return best;
}

Dyadic Dist(const Exhaustion& e, const Permutation& a, const Permutation& b) {
  const std::optional<int> conf = Confluent(e, a, b);
  return conf ? Dyadic::PowerOfHalf(*conf) : Dyadic();
}

Dyadic DistStar(const Exhaustion& e, const Permutation& a,
                const Permutation& b) {
  return Dist(e, a, b) + Dist(e, a.inverse(), b.inverse());
}

std::vector<std::string> CheckUltrametric(const Exhaustion& e,
                                          const std::vector<Triple>& triples) {
  std::vector<std::string> violations;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const Triple& p = triples[t];
    auto report = [&](const std::string& what) {
      std::string line = "triple " + std::to_string(t) + ": " + what + " [";
      for (int i = 0; i < 3; ++i) line += (i ? " " : "") + p[i].ToCycleString();
      violations.push_back(line + "]");
    };
    for (int i = 0; i < 3; ++i) {
      const Permutation& a = p[i];
      const Permutation& b = p[(i + 1) % 3];
      const Permutation& c = p[(i + 2) % 3];
      if (!Dist(e, a, a).is_zero()) report("d(x, x) != 0");
      const Dyadic ab = Dist(e, a, b);
      if (ab != Dist(e, b, a)) report("asymmetric");
      if (Dist(e, a, c) > std::max(ab, Dist(e, b, c))) {
        report("strong triangle inequality fails");
      }
    }
  }
  return violations;
}

std::vector<Dyadic> CheckCauchy(const Exhaustion& e,
                                const std::vector<Permutation>& sequence) {
  std::vector<Dyadic> table;
  for (std::size_t k = 0; k + 1 < sequence.size(); ++k) {
    Dyadic worst;
    for (std::size_t l = k + 1; l < sequence.size(); ++l) {
      worst = std::max(worst, Dist(e, sequence[k], sequence[l]));
    }
    table.push_back(worst);
  }
  return table;
}

BallReport BallVersusStabilizer(const PermGroup& group, const Exhaustion& e,
                                int k, std::uint64_t limit) {
  if (k < 0 || k >= e.size()) {
    throw PreconditionError("no exhaustion set X_" + std::to_string(k));
  }
  BallReport report;
  report.index = k;
  const PermGroup stab = PointStabilizer(group, e.set(k));
  report.stabilizer_order = stab.order();
  const Permutation id = Permutation::Identity(group.degree());
  const Dyadic radius = Dyadic::PowerOfHalf(k);
  bool inside = true;
  for (const Permutation& b : Elements(group, limit)) {
    if (Dist(e, id, b) < radius) {
      ++report.ball_size;
      inside = inside && stab.contains(b);
    }
  }
  report.matches = inside && GroupOrder(report.ball_size) == report.stabilizer_order;
  return report;
}

std::vector<Triple> RandomTriples(const PermGroup& group, int count,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Bsgs& chain = group.bsgs();
  std::vector<Triple> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Permutation a = chain.RandomElement(rng);
    Permutation b = chain.RandomElement(rng);
    Permutation c = chain.RandomElement(rng);
    out.push_back({std::move(a), std::move(b), std::move(c)});
  }
  return out;
}

}  // namespace halinkit
