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

#ifndef RINGLOAD_PATTERN_HPP_
#define RINGLOAD_PATTERN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringload/reduction.hpp"

namespace ringload {

// Points p(0..m) of an unsplittable crossing-form solution, where
// p(k) - p(k-1) is either +v_k (demand k clockwise) or -u_k.
//
// A pattern refers to its crossing instance without owning it; the instance
// must outlive the pattern.
class Pattern {
 public:
  // Throws kStepMismatch if the points do not form a pattern of `owner`.
  Pattern(const CrossingInstance& owner, std::vector<Scaled> points);

  const CrossingInstance& owner() const { return *owner_; }
  const std::vector<Scaled>& points() const { return points_; }
  std::size_t m() const { return points_.size() - 1; }
  Scaled operator[](std::size_t k) const { return points_[k]; }

  Scaled start() const { return points_.front(); }
  Scaled end() const { return points_.back(); }
  // The strip [low, high] the pattern lives on.
  Scaled low() const;
  Scaled high() const;
  Scaled width() const { return high() - low(); }

 private:
  const CrossingInstance* owner_;
  std::vector<Scaled> points_;
};

struct ClosenessWitness {
  std::size_t k = 0;
  Scaled eps_prime;  // p1(k) - p2(k)

  friend bool operator==(const ClosenessWitness&,
                         const ClosenessWitness&) = default;
};

// Additive performance max{2b - x - y, x + y - 2a}.
Scaled Performance(const Pattern& p);

// Greedy patterns living on [0, D]: each step keeps the next point in the
// strip and picks the one nearer to D/2, ties going to +v. The public
// versions require the fixed point in [D/14, 13D/14].
Pattern ForwardGreedy(const CrossingInstance& cross, Scaled start);
Pattern BackwardGreedy(const CrossingInstance& cross, Scaled end);

// Same constructions with the fixed point anywhere in [0, D].
Pattern ForwardGreedyOnStrip(const CrossingInstance& cross, Scaled start);
Pattern BackwardGreedyOnStrip(const CrossingInstance& cross, Scaled end);

// Smallest k with |p1(k) - p2(k)| <= eps. Throws kOwnerMismatch.
std::optional<ClosenessWitness> FindClose(const Pattern& p1, const Pattern& p2,
                                          Scaled eps);

// Prefix of p1 up to the witness index, suffix of p2 after it, shifted so the
// start is p1(0) - eps'/2. Start plus end equals p1.start() + p2.end().
Pattern Crossover(const Pattern& p1, const Pattern& p2,
                  const ClosenessWitness& w);

UnsplitRouting SolutionFromPattern(const Pattern& p);
Pattern PatternFromSolution(const CrossingInstance& cross,
                            const UnsplitRouting& z, Scaled start);

// Plain-text "k p(k)" table, one row per point, exact rationals.
std::string DumpTable(const Pattern& p);

}  // namespace ringload

#endif  // RINGLOAD_PATTERN_HPP_
