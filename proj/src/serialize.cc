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


#include "halinkit/serialize.h"

#include <cstdint>
#include <limits>
#include <string>

#include "halinkit/errors.h"

namespace halinkit {

Json OrderToJson(const GroupOrder& order) {
  if (order <= std::numeric_limits<std::int64_t>::max()) {
    return order.convert_to<std::int64_t>();
  }
  return order.str();
}

Json PermutationToJson(const Permutation& p) { return p.images(); }

Permutation PermutationFromJson(const Json& j) {
  if (!j.is_array()) throw PreconditionError("permutation must be an array");
  std::vector<int> images;
  for (const Json& x : j) {
    if (!x.is_number_integer()) {
      throw PreconditionError("permutation entries must be integers");
    }
    images.push_back(x.get<int>());
  }
  return Permutation(std::move(images));
}

Json GroupToJson(const PermGroup& group) {
  Json gens = Json::array();
  for (const Permutation& g : group.generators()) gens.push_back(PermutationToJson(g));
  return {{"degree", group.degree()},
          {"order", OrderToJson(group.order())},
          {"generators", gens}};
}

Json DyadicToJson(const Dyadic& d) { return d.ToString(); }

Json BoundsToJson(const Bounds& b) {
  return {{"n", b.n},
          {"popcount", b.popcount},
          {"cost_bound", b.cost_bound},
          {"chain_bound", b.chain_bound}};
}

Json WitnessToJson(const SubsetWitness& w) {
  return {{"size", w.size}, {"witness", w.witness}};
}

Json MotionToJson(const MotionResult& m) {
  return {{"motion", m.motion}, {"witness", PermutationToJson(m.witness)}};
}

Json ChainToJson(const StabilizerChain& chain) {
  Json orders = Json::array();
  for (const GroupOrder& o : chain.orders) orders.push_back(OrderToJson(o));
  Json filter = Json::array();
  for (bool f : chain.from_candidate_filter) filter.push_back(f);
  Json out = {{"base", chain.base},
              {"added", chain.added},
              {"orders", orders},
              {"from_candidate_filter", filter},
              {"final_set", chain.final_set},
              {"size", chain.final_set.size()},
              {"length", chain.length()},
              {"stalled", chain.stalled},
              {"completed", chain.completed()}};
  if (chain.bounds) {
    out["bounds"] = BoundsToJson(*chain.bounds);
    out["within_bound"] = chain.within_bound();
  }
  return out;
}

Json SubdegreesToJson(const std::vector<SubdegreeEntry>& report) {
  Json out = Json::array();
  for (const SubdegreeEntry& e : report) {
    out.push_back({{"vertex", e.vertex}, {"max_orbit", e.max_orbit}});
  }
  return out;
}

Json ConstructionToJson(const ConstructionState& state, bool with_maps) {
  Json rounds = Json::array();
  for (int k = 0; k < state.num_rounds(); ++k) {
    const ConstructionRound& r = state.rounds[k];
    Json entry = {{"k", k},
                  {"fixed_size", r.fixed.size()},
                  {"moved", r.moved},
                  {"phi_motion", r.phi.motion()}};
    if (with_maps) entry["phi"] = PermutationToJson(r.phi);
    rounds.push_back(entry);
  }
  Json out = {{"family", FamilyKindName(state.family.kind)},
              {"depth", state.family.depth},
              {"vertices", state.family.graph.num_vertices()},
              {"requested_rounds", state.requested_rounds},
              {"rounds_completed", state.num_rounds()},
              {"exhausted", state.exhausted},
              {"next_fixed_size", state.next_fixed.size()},
              {"rounds", rounds}};
  if (state.exhausted) out["exhaustion_reason"] = state.exhaustion_reason;
  return out;
}

Json DistinctnessToJson(const DistinctnessReport& report,
                        std::size_t max_witnesses) {
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < report.witnesses.size() && i < max_witnesses; ++i) {
    const PairWitness& w = report.witnesses[i];
    witnesses.push_back({{"first", EpsilonWord::FromIndex(w.first, report.word_length).ToString()},
                         {"second", EpsilonWord::FromIndex(w.second, report.word_length).ToString()},
                         {"differing_index", w.differing_index},
                         {"vertex", w.vertex},
                         {"image_first", w.image_first},
                         {"image_second", w.image_second}});
  }
  return {{"word_length", report.word_length},
          {"words", report.num_words},
          {"pairs", report.num_pairs},
          {"witnessed", report.num_witnessed},
          {"all_witnessed", report.all_witnessed()},
          {"witnesses", witnesses}};
}

}  // namespace halinkit
