// Copyright 2026 The ringload Authors
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

#ifndef RINGLOAD_INSTANCES_HPP_
#define RINGLOAD_INSTANCES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringload/reduction.hpp"

namespace ringload {

struct LabeledInstance {
  RingInstance instance;
  SplitRouting split;
};

// fig1, fig2, fig5, fig6, fig7, fig8.
const std::vector<std::string>& BuiltinNames();

// Built-in instance with its split routing. Runs the instance's
// transcription self-check before returning. Throws kUnknownName.
LabeledInstance Builtin(std::string_view name);

// Crossing-form pairs of the crossing-form builtins, as (v, u) in
// drawing order. Throws kUnknownName for fig1, fig7, fig8.
std::vector<CrossingPair> BuiltinPairs(std::string_view name);

// Pairs given as integer (v, u) tuples.
std::vector<CrossingPair> PairsFromVu(
    const std::vector<std::pair<int, int>>& vu);

struct Extension {
  RingInstance instance;
  SplitRouting split;
  Scaled level;             // common edge load after extension
  std::size_t added = 0;    // number of edge demands appended
  Scaled max_added;         // largest appended value
  bool within_max_demand = true;  // every appended value <= D
};

// Appends one demand per under-loaded edge, routed along that edge, so that
// every edge carries the maximum load.
Extension EqualizeExtension(const RingInstance& inst,
                            const SplitRouting& split);

// Common edge load if every demand uses only shortest directions and all
// loads are equal; that load is then the split optimum.
std::optional<Scaled> CertifySplitOptimal(const RingInstance& inst,
                                          const SplitRouting& split);

// Deterministic random crossing instance. Structured output has integral
// u, v with u + v even, d = D at every even 1-based position, and odd sum
// of u. Throws kInfeasibleParams.
CrossingInstance RandomCrossing(int m, int max_demand, std::uint64_t seed,
                                bool structured);

// True iff pairs belong to the structured family for D.
bool IsStructured(const std::vector<CrossingPair>& pairs, Scaled max_demand);

}  // namespace ringload

#endif  // RINGLOAD_INSTANCES_HPP_
