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

#ifndef RINGLOAD_EXACT_HPP_
#define RINGLOAD_EXACT_HPP_

#include <cstddef>
#include <optional>

#include "ringload/reduction.hpp"

namespace ringload {

inline constexpr std::size_t kDefaultBruteForceCap = 26;

struct BruteForceOptions {
  std::size_t cap = kDefaultBruteForceCap;  // max nonzero demands enumerated
  unsigned workers = 1;
};

struct ExactResult {
  UnsplitRouting routing;
  Scaled value;
};

// Minimum over all unsplittable routings of the largest per-edge increase
// over `split`. Ties go to the lexicographically smallest direction vector
// (clockwise first). Zero-value demands stay clockwise and are not
// enumerated. Throws kTooManyDemands.
ExactResult BruteForceMinIncrease(const RingInstance& inst,
                                  const SplitRouting& split,
                                  const BruteForceOptions& options = {});

// Optimum unsplittable load L with a minimizing routing.
ExactResult BruteForceOptimumL(const RingInstance& inst,
                               const BruteForceOptions& options = {});

// Is there a crossing-form solution whose pattern from 0 ends at y and has
// |2 p(k) - y| <= t for every k? Needs an integral instance
// (throws kNotIntegral); non-integral y is simply infeasible.
std::optional<UnsplitRouting> DpFeasible(const CrossingInstance& cross,
                                         Scaled t, Scaled y);

struct DpResult {
  UnsplitRouting z;
  Scaled t_star;  // minimum additive performance
};

// Exact minimum additive performance by binary search on t over
// [0, 3D/2]. Needs an integral instance.
DpResult DpMinIncrease(const CrossingInstance& cross);

// Decision version over all end points: some solution has performance <= t.
bool DpFeasibleAnyEnd(const CrossingInstance& cross, Scaled t);

}  // namespace ringload

#endif  // RINGLOAD_EXACT_HPP_
