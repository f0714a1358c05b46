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

#ifndef RINGLOAD_RING_MODEL_HPP_
#define RINGLOAD_RING_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringload/core.hpp"

namespace ringload {

// Demand between nodes i < j (1-based, numbered clockwise).
struct Demand {
  int i = 0;
  int j = 0;
  Scaled d;

  friend bool operator==(const Demand&, const Demand&) = default;
};

struct RingInstance {
  int n = 0;
  std::vector<Demand> demands;

  // Maximum demand value D (zero for an instance without demands).
  Scaled max_demand() const;

  friend bool operator==(const RingInstance&, const RingInstance&) = default;
};

// Clockwise amount per demand; the counterclockwise amount is d - cw.
struct SplitRouting {
  std::vector<Scaled> cw;

  friend bool operator==(const SplitRouting&, const SplitRouting&) = default;
};

enum class Direction : unsigned char { kClockwise, kCounterclockwise };

inline Direction Opposite(Direction d) {
  return d == Direction::kClockwise ? Direction::kCounterclockwise
                                    : Direction::kClockwise;
}

struct UnsplitRouting {
  std::vector<Direction> dirs;

  friend bool operator==(const UnsplitRouting&,
                         const UnsplitRouting&) = default;
};

// Entry k-1 is the load of edge k = {k, k+1}; the last entry is edge {n, 1}.
using LoadVector = std::vector<Scaled>;

struct Violation {
  ErrorCode code;
  std::string message;
};

// First invariant violation, or nullopt. `split` may be null.
std::optional<Violation> ValidateInstance(const RingInstance& inst,
                                          const SplitRouting* split = nullptr);
// Throws Error with the first violation.
void RequireValid(const RingInstance& inst,
                  const SplitRouting* split = nullptr);

// Number of edges on the clockwise path i -> j.
inline int ClockwiseLength(int n, const Demand& dem) {
  (void)n;
  return dem.j - dem.i;
}
inline int CounterclockwiseLength(int n, const Demand& dem) {
  return n - (dem.j - dem.i);
}

LoadVector EdgeLoads(const RingInstance& inst, const SplitRouting& split);
LoadVector EdgeLoads(const RingInstance& inst, const UnsplitRouting& routing);

Scaled MaxLoad(const LoadVector& loads);

// Largest per-edge increase of `unsplit` over `split`; may be negative.
Scaled AdditiveIncrease(const RingInstance& inst, const SplitRouting& split,
                        const UnsplitRouting& unsplit);

// A split routing whose every demand is already unsplittable, read back as
// directions. Returns nullopt if some demand is genuinely split.
std::optional<UnsplitRouting> AsUnsplit(const RingInstance& inst,
                                        const SplitRouting& split);

// Split routing equivalent to an unsplittable one.
SplitRouting AsSplit(const RingInstance& inst, const UnsplitRouting& routing);

}  // namespace ringload

#endif  // RINGLOAD_RING_MODEL_HPP_
