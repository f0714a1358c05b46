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

#ifndef RINGLOAD_APPROX_HPP_
#define RINGLOAD_APPROX_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ringload/pattern.hpp"

namespace ringload {

// Which construction produced a solution. The small/big variants name the
// accepted candidate: a single greedy pattern (a, b, c) or a crossover of two
// of them (first letter supplies the start, second the end).
enum class Branch {
  kSsw,
  kMedium,
  kSmallBigA,
  kSmallBigB,
  kSmallBigCrossAB,
  kSmallBigC,
  kSmallBigCrossCA,
  kSmallBigCrossCB,
};

std::string_view BranchName(Branch branch);

struct SolveReport {
  UnsplitRouting z;             // crossing-form directions
  std::vector<Scaled> points;   // a pattern realizing z
  Scaled perf;                  // exact additive performance of z
  Rational bound;               // a-priori guarantee, perf <= bound
  Branch branch = Branch::kSsw;
};

// Forward greedy from D/2; guarantee 3D/2.
SolveReport SswThreeHalves(const CrossingInstance& cross);

// Pattern built around the medium demand i (0-based) with d_i in
// [delta*D, (1-delta)*D]; guarantee (3/2 - delta/2)*D. Throws kNotMedium.
SolveReport MediumDemandSolve(const CrossingInstance& cross, std::size_t i,
                              const Rational& delta);

// Requires every d_i in [0, 2D/7] or [5D/7, D]; guarantee 19D/14.
// Throws kMediumDemandPresent.
SolveReport SmallBigSolve(const CrossingInstance& cross);

struct MediumChoice {
  std::size_t index = 0;
  Rational delta;  // min(d, D - d) / D
};

// Demand maximizing min(d, D - d), lowest index on ties. With
// `qualifying_only`, only demands with d in [2D/7, 5D/7] are considered.
std::optional<MediumChoice> PickMediumDemand(const CrossingInstance& cross,
                                            bool qualifying_only);

// Medium demand if one exists (the one maximizing min(d, D - d)), otherwise
// small/big. Guarantee 19D/14 always.
SolveReport Solve1914(const CrossingInstance& cross);

// Relabels the ring so demand r becomes demand 0. Demands that wrap around
// swap their u and v; the performance of every solution is unchanged.
CrossingInstance RotateLeft(const CrossingInstance& cross, std::size_t r);
// Maps a solution of RotateLeft(cross, r) back to `cross`.
UnsplitRouting UnrotateSolution(const UnsplitRouting& rotated, std::size_t r);

}  // namespace ringload

#endif  // RINGLOAD_APPROX_HPP_
