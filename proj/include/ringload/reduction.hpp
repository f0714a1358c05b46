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

#ifndef RINGLOAD_REDUCTION_HPP_
#define RINGLOAD_REDUCTION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "ringload/ring_model.hpp"

namespace ringload {

// Demand k of a crossing instance joins nodes k and k+m of a 2m-node ring;
// u units travel clockwise from k to k+m, v units counterclockwise.
struct CrossingPair {
  Scaled u;
  Scaled v;

  Scaled d() const { return u + v; }
  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

// Where an original edge ended up after node contraction. `base` is the load
// contributed by demands that were already unsplittable.
struct EdgeImage {
  int reduced_edge = 0;  // 1..2m, 0 when m == 0
  Scaled base;

  friend bool operator==(const EdgeImage&, const EdgeImage&) = default;
};

struct FixedDemand {
  std::size_t index = 0;
  Direction dir = Direction::kClockwise;

  friend bool operator==(const FixedDemand&, const FixedDemand&) = default;
};

struct CrossingInstance {
  std::vector<CrossingPair> pairs;
  Scaled max_demand;  // D of the original instance
  std::vector<EdgeImage> backmap;
  std::vector<FixedDemand> fixed;
  std::vector<std::size_t> source;  // reduced demand -> original demand

  std::size_t m() const { return pairs.size(); }
  std::size_t original_demand_count() const {
    return fixed.size() + source.size();
  }
  // True when every u and v is a whole number.
  bool is_integral() const;

  // Crossing instance that is its own original (identity backmap).
  static CrossingInstance Standalone(std::vector<CrossingPair> pairs,
                                     Scaled max_demand);

  friend bool operator==(const CrossingInstance&,
                         const CrossingInstance&) = default;
};

struct Reduction {
  CrossingInstance crossing;
  // The input split after uncrossing, indexed like the original demands.
  SplitRouting uncrossed;
};

// Parallel demands admit edge-disjoint paths; demands sharing an endpoint are
// always parallel.
bool DemandsCross(int n, const Demand& a, const Demand& b);

// Reroutes min{x_a', x_b'} between two parallel demands so that one of them
// becomes unsplittable without raising any edge load. Throws kNotParallel.
SplitRouting UncrossPair(const RingInstance& inst, const SplitRouting& split,
                         std::size_t a, std::size_t b);

Reduction ReduceToCrossing(const RingInstance& inst, const SplitRouting& split);

// Expands a crossing-form direction vector to the original demands.
// Throws kLengthMismatch.
UnsplitRouting LiftSolution(const CrossingInstance& cross,
                            const UnsplitRouting& z);

// Loads of the 2m reduced edges under the crossing split (u, v).
LoadVector CrossingEdgeLoads(const std::vector<CrossingPair>& pairs);

// Crossing instance written out as a 2m-node ring with its split.
std::pair<RingInstance, SplitRouting> ToRing(const CrossingInstance& cross);

}  // namespace ringload

#endif  // RINGLOAD_REDUCTION_HPP_
