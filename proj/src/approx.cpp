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

#include "ringload/approx.hpp"

#include <algorithm>

namespace ringload {

std::string_view BranchName(Branch branch) {
  switch (branch) {
    case Branch::kSsw: return "ssw";
    case Branch::kMedium: return "medium";
    case Branch::kSmallBigA: return "smallbig-a";
    case Branch::kSmallBigB: return "smallbig-b";
    case Branch::kSmallBigCrossAB: return "smallbig-crossAB";
    case Branch::kSmallBigC: return "smallbig-c";
    case Branch::kSmallBigCrossCA: return "smallbig-ca";
    case Branch::kSmallBigCrossCB: return "smallbig-cb";
  }
  return "unknown";
}

CrossingInstance RotateLeft(const CrossingInstance& cross, std::size_t r) {
  const std::size_t m = cross.m();
  std::vector<CrossingPair> pairs;
  pairs.reserve(m);
  for (std::size_t k = r; k < m; ++k) pairs.push_back(cross.pairs[k]);
  for (std::size_t k = 0; k < r && k < m; ++k) {
    pairs.push_back({cross.pairs[k].v, cross.pairs[k].u});
  }
  return CrossingInstance::Standalone(std::move(pairs), cross.max_demand);
}

UnsplitRouting UnrotateSolution(const UnsplitRouting& rotated, std::size_t r) {
  const std::size_t m = rotated.dirs.size();
  UnsplitRouting z;
  z.dirs.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    z.dirs[j] = j >= r ? rotated.dirs[j - r]
                       : Opposite(rotated.dirs[m - r + j]);
  }
  return z;
}

namespace {

SolveReport Finish(const Pattern& p, Rational bound, Branch branch) {
  SolveReport report;
  report.z = SolutionFromPattern(p);
  report.points = p.points();
  report.perf = Performance(p);
  report.bound = bound;
  report.branch = branch;
  if (report.perf.ToRational() > bound) {
    throw Error(ErrorCode::kInternalGuaranteeViolation,
                std::string(BranchName(branch)) + " produced performance " +
                    report.perf.ToString() + " above bound " +
                    bound.ToString());
  }
  return report;
}

Rational Times(Scaled value, std::int64_t num, std::int64_t den) {
  return value.ToRational() * Rational(num, den);
}

}  // namespace

SolveReport SswThreeHalves(const CrossingInstance& cross) {
  const Scaled d = cross.max_demand;
  return Finish(ForwardGreedy(cross, d.Half()), Times(d, 3, 2), Branch::kSsw);
}

SolveReport MediumDemandSolve(const CrossingInstance& cross, std::size_t i,
                              const Rational& delta) {
  const std::size_t m = cross.m();
  if (i >= m) {
    throw Error(ErrorCode::kNotMedium,
                "demand index " + std::to_string(i) + " out of range");
  }
  const Scaled big_d = cross.max_demand;
  const Rational di = cross.pairs[i].d().ToRational();
  const Rational dd = big_d.ToRational();
  if (delta < Rational(0) || di < delta * dd ||
      di > (Rational(1) - delta) * dd) {
    throw Error(ErrorCode::kNotMedium,
                "d = " + di.ToString() + " not in [delta*D, (1-delta)*D] for "
                "delta = " + delta.ToString());
  }

  // Rotate so the medium demand is last, then extend a backward greedy
  // pattern of the remaining demands that ends at (D + d)/2 - v.
  const std::size_t r = (i + 1) % m;
  const CrossingInstance rotated = RotateLeft(cross, r);
  const CrossingPair last = rotated.pairs.back();
  const CrossingInstance head = CrossingInstance::Standalone(
      {rotated.pairs.begin(), rotated.pairs.end() - 1}, big_d);
  const Scaled target = (big_d + last.d()).Half() - last.v;
  const Pattern prefix = BackwardGreedyOnStrip(head, target);

  std::vector<Scaled> points = prefix.points();
  points.push_back(prefix.start() <= big_d.Half() ? target + last.v
                                                  : target - last.u);
  const Pattern extended(rotated, std::move(points));
  const UnsplitRouting z =
      UnrotateSolution(SolutionFromPattern(extended), r);

  const Rational bound =
      (Rational(3, 2) - delta * Rational(1, 2)) * big_d.ToRational();
  return Finish(PatternFromSolution(cross, z, Scaled()), bound,
                Branch::kMedium);
}

SolveReport SmallBigSolve(const CrossingInstance& cross) {
  const Scaled big_d = cross.max_demand;
  const Scaled small_cap = Scaled::Fraction(big_d, 2, 7);
  const Scaled big_floor = Scaled::Fraction(big_d, 5, 7);
  for (std::size_t k = 0; k < cross.m(); ++k) {
    Scaled d = cross.pairs[k].d();
    if (small_cap < d && d < big_floor) {
      throw Error(ErrorCode::kMediumDemandPresent,
                  "demand " + std::to_string(k) + " has medium value " +
                      d.ToString());
    }
  }
  const Rational bound = Times(big_d, 19, 14);
  const Scaled close = Scaled::Fraction(big_d, 1, 7);

  const Pattern pa = ForwardGreedy(cross, Scaled::Fraction(big_d, 5, 14));
  if (pa.end() >= small_cap) return Finish(pa, bound, Branch::kSmallBigA);

  const Pattern pb = BackwardGreedy(cross, Scaled::Fraction(big_d, 3, 7));
  if (Scaled::Fraction(big_d, 3, 14) <= pb.start() &&
      pb.start() <= Scaled::Fraction(big_d, 13, 14)) {
    return Finish(pb, bound, Branch::kSmallBigB);
  }
  if (auto w = FindClose(pa, pb, close)) {
    return Finish(Crossover(pa, pb, *w), bound, Branch::kSmallBigCrossAB);
  }

  const Pattern pc = ForwardGreedy(cross, Scaled::Fraction(big_d, 11, 14));
  if (pc.end() <= Scaled::Fraction(big_d, 4, 7)) {
    return Finish(pc, bound, Branch::kSmallBigC);
  }
  // The three patterns are ordered differently at their ends than at their
  // starts (not cyclically), so one pair is D/7-close; p_a and p_b are not.
  if (auto w = FindClose(pc, pa, close)) {
    return Finish(Crossover(pc, pa, *w), bound, Branch::kSmallBigCrossCA);
  }
  if (auto w = FindClose(pc, pb, close)) {
    return Finish(Crossover(pc, pb, *w), bound, Branch::kSmallBigCrossCB);
  }
  throw Error(ErrorCode::kInternalGuaranteeViolation,
              "no D/7-close pair among the three greedy patterns");
}

std::optional<MediumChoice> PickMediumDemand(const CrossingInstance& cross,
                                            bool qualifying_only) {
  const Scaled big_d = cross.max_demand;
  const Scaled lo = Scaled::Fraction(big_d, 2, 7);
  const Scaled hi = Scaled::Fraction(big_d, 5, 7);
  std::optional<MediumChoice> best;
  Scaled best_margin;
  for (std::size_t k = 0; k < cross.m(); ++k) {
    Scaled d = cross.pairs[k].d();
    if (qualifying_only && (d < lo || d > hi)) continue;
    Scaled margin = std::min(d, big_d - d);
    if (!best || margin > best_margin) {
      best = MediumChoice{k, margin.ToRational() / big_d.ToRational()};
      best_margin = margin;
    }
  }
  return best;
}

SolveReport Solve1914(const CrossingInstance& cross) {
  if (auto choice = PickMediumDemand(cross, true)) {
    return MediumDemandSolve(cross, choice->index, choice->delta);
  }
  return SmallBigSolve(cross);
}

}  // namespace ringload
