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


// JSON forms of library results. Group orders are JSON integers when they
// fit in 64 bits and decimal strings otherwise.

#ifndef HALINKIT_SERIALIZE_H_
#define HALINKIT_SERIALIZE_H_

#include <vector>

#include "json.hpp"

#include "halinkit/dyadic.h"
#include "halinkit/halin_limit.h"
#include "halinkit/invariants.h"
#include "halinkit/perm_group.h"
#include "halinkit/permutation.h"

namespace halinkit {

using Json = nlohmann::ordered_json;

Json OrderToJson(const GroupOrder& order);
// Image array.
Json PermutationToJson(const Permutation& p);
Permutation PermutationFromJson(const Json& j);
Json GroupToJson(const PermGroup& group);
Json DyadicToJson(const Dyadic& d);
Json BoundsToJson(const Bounds& b);
Json WitnessToJson(const SubsetWitness& w);
Json MotionToJson(const MotionResult& m);
Json ChainToJson(const StabilizerChain& chain);
Json SubdegreesToJson(const std::vector<SubdegreeEntry>& report);
// Rounds, fixed-set sizes and moved vertices; phi as image arrays only when
// `with_maps` is set.
Json ConstructionToJson(const ConstructionState& state, bool with_maps);
// Counts plus at most `max_witnesses` witness records.
Json DistinctnessToJson(const DistinctnessReport& report,
                        std::size_t max_witnesses);

}  // namespace halinkit

#endif  // HALINKIT_SERIALIZE_H_
