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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ringload/approx.hpp"
#include "ringload/exact.hpp"
#include "ringload/instances.hpp"
#include "test_support.hpp"

namespace ringload {
namespace {

using testing::Cross;
using testing::Points;
using testing::Q;
using testing::S;
using testing::Strings;
using testing::Uniform;

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalGuaranteeViolation;
}

// Recomputes everything a report claims from its direction vector.
void ExpectConsistent(const CrossingInstance& cross, const SolveReport& r) {
  ASSERT_EQ(r.z.dirs.size(), cross.m());
  const Pattern p(cross, r.points);
  EXPECT_EQ(SolutionFromPattern(p), r.z);
  EXPECT_EQ(Performance(p), r.perf);
  EXPECT_EQ(testing::DirectPerformance(cross, r.z), r.perf);
  EXPECT_LE(r.perf.ToRational(), r.bound);
}

CrossingInstance Figure(std::string_view name, int big_d) {
  return CrossingInstance::Standalone(BuiltinPairs(name), S(big_d));
}

TEST(BranchNameTest, Names) {
  EXPECT_EQ(BranchName(Branch::kSsw), "ssw");
  EXPECT_EQ(BranchName(Branch::kMedium), "medium");
  EXPECT_EQ(BranchName(Branch::kSmallBigA), "smallbig-a");
  EXPECT_EQ(BranchName(Branch::kSmallBigB), "smallbig-b");
  EXPECT_EQ(BranchName(Branch::kSmallBigCrossAB), "smallbig-crossAB");
  EXPECT_EQ(BranchName(Branch::kSmallBigC), "smallbig-c");
  EXPECT_EQ(BranchName(Branch::kSmallBigCrossCA), "smallbig-ca");
  EXPECT_EQ(BranchName(Branch::kSmallBigCrossCB), "smallbig-cb");
}

TEST(SswTest, FigureValues) {
  const CrossingInstance f2 = Figure("fig2", 10), f5 = Figure("fig5", 100),
                         f6 = Figure("fig6", 10);
  EXPECT_EQ(SswThreeHalves(f2).perf, S(13));
  EXPECT_EQ(SswThreeHalves(f6).perf, S(11));
  EXPECT_EQ(SswThreeHalves(f5).perf, S(101));
  const SolveReport r = SswThreeHalves(f2);
  EXPECT_EQ(r.bound, Rational(15));
  EXPECT_EQ(r.branch, Branch::kSsw);
  EXPECT_EQ(r.points.front(), S(5));
  ExpectConsistent(f2, r);
}

TEST(MediumTest, Example) {
  const CrossingInstance inst = Cross({{5, 5}, {2, 3}}, 10);
  const SolveReport r = MediumDemandSolve(inst, 1, Rational(1, 2));
  EXPECT_EQ(r.branch, Branch::kMedium);
  EXPECT_EQ(r.perf, S(7));
  EXPECT_EQ(r.bound, Rational(25, 2));
  EXPECT_EQ(Strings(PatternFromSolution(inst, r.z, Q(19, 2)).points()),
            (std::vector<std::string>{"19/2", "9/2", "5/2"}));
  ExpectConsistent(inst, r);
}

TEST(MediumTest, Preconditions) {
  const CrossingInstance inst = Cross({{5, 5}, {1, 1}}, 10);
  EXPECT_EQ(CodeOf([&] { MediumDemandSolve(inst, 1, Rational(1, 4)); }),
            ErrorCode::kNotMedium);
  EXPECT_EQ(CodeOf([&] { MediumDemandSolve(inst, 2, Rational(0)); }),
            ErrorCode::kNotMedium);
  EXPECT_EQ(CodeOf([&] { MediumDemandSolve(inst, 0, Rational(-1, 2)); }),
            ErrorCode::kNotMedium);
  EXPECT_NO_THROW(MediumDemandSolve(inst, 1, Rational(1, 5)));
  EXPECT_NO_THROW(MediumDemandSolve(inst, 0, Rational(0)));
}

TEST(MediumTest, FigureChoices) {
  for (std::string_view name : {"fig2", "fig6"}) {
    const CrossingInstance f = Figure(name, 10);
    auto choice = PickMediumDemand(f, true);
    ASSERT_TRUE(choice.has_value());
    EXPECT_EQ(choice->index, 0u);
    const SolveReport r = Solve1914(f);
    EXPECT_EQ(r.branch, Branch::kMedium);
    EXPECT_EQ(r.perf, S(11));
    EXPECT_EQ(r.bound, Rational(13));
    ExpectConsistent(f, r);
  }
  EXPECT_FALSE(PickMediumDemand(Figure("fig5", 100), true).has_value());
}

TEST(PickMediumDemandTest, Margins) {
  const CrossingInstance inst = Cross({{1, 1}, {3, 4}, {2, 2}, {6, 4}, {4, 3}}, 14);
  auto any = PickMediumDemand(inst, false);
  ASSERT_TRUE(any.has_value());
  EXPECT_EQ(any->index, 1u);
  EXPECT_EQ(any->delta, Rational(1, 2));
  auto none = PickMediumDemand(Cross({{1, 1}, {5, 5}}, 10), true);
  EXPECT_FALSE(none.has_value());
  auto lowest = PickMediumDemand(Cross({{2, 2}, {3, 3}, {4, 4}}, 10), true);
  ASSERT_TRUE(lowest.has_value());
  EXPECT_EQ(lowest->index, 0u);
  EXPECT_EQ(lowest->delta, Rational(2, 5));
}

TEST(SmallBigTest, Examples) {
  const CrossingInstance ex = Cross({{7, 7}, {2, 2}, {5, 9}, {1, 3}}, 14);
  const SolveReport r = SmallBigSolve(ex);
  EXPECT_EQ(r.branch, Branch::kSmallBigA);
  EXPECT_EQ(r.perf, S(11));
  EXPECT_EQ(r.bound, Rational(19));
  ExpectConsistent(ex, r);

  const CrossingInstance single = Cross({{5, 5}}, 10);
  const SolveReport s = SmallBigSolve(single);
  EXPECT_EQ(s.branch, Branch::kSmallBigA);
  EXPECT_EQ(Strings(s.points), (std::vector<std::string>{"25/7", "60/7"}));

  const CrossingInstance tiny = Cross({{1, 1}, {1, 1}}, 2);
  const SolveReport t = SmallBigSolve(tiny);
  EXPECT_EQ(t.branch, Branch::kSmallBigA);
  EXPECT_EQ(t.perf, S(2));
  EXPECT_EQ(DpMinIncrease(tiny).t_star, S(2));
}

TEST(SmallBigTest, FigureFive) {
  const CrossingInstance f5 = Figure("fig5", 100);
  const SolveReport r = Solve1914(f5);
  EXPECT_EQ(r.branch, Branch::kSmallBigA);
  EXPECT_EQ(r.perf, S(101));
  EXPECT_EQ(r.bound, Rational(950, 7));
  ExpectConsistent(f5, r);
}

TEST(SmallBigTest, MediumDemandPresent) {
  EXPECT_EQ(CodeOf([] { SmallBigSolve(Cross({{7, 7}, {3, 3}}, 14)); }),
            ErrorCode::kMediumDemandPresent);
  EXPECT_NO_THROW(SmallBigSolve(Cross({{7, 7}, {2, 2}, {5, 5}}, 14)));
}

TEST(RotateTest, WrappedDemandsSwap) {
  const CrossingInstance inst = Cross({{1, 2}, {3, 4}, {5, 6}}, 11);
  const CrossingInstance rot = RotateLeft(inst, 1);
  EXPECT_EQ(rot.pairs, testing::UV({{3, 4}, {5, 6}, {2, 1}}));
  EXPECT_EQ(RotateLeft(inst, 0).pairs, inst.pairs);
}

TEST(RotateTest, PerformanceIsPreserved) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const CrossingInstance inst = testing::RandomPairs(rng, Uniform(rng, 1, 9), 12);
    const std::size_t r = Uniform(rng, 0, static_cast<int>(inst.m()) - 1);
    const CrossingInstance rot = RotateLeft(inst, r);
    UnsplitRouting z;
    for (std::size_t k = 0; k < inst.m(); ++k) {
      z.dirs.push_back(Uniform(rng, 0, 1) ? Direction::kClockwise
                                          : Direction::kCounterclockwise);
    }
    ASSERT_EQ(testing::DirectPerformance(rot, z),
              testing::DirectPerformance(inst, UnrotateSolution(z, r)));
  }
}

struct GuaranteeStats {
  int cases = 0;
  int medium = 0;
  int smallbig = 0;
};

// All constructions against the exact optimum on random integral instances.
TEST(GuaranteeTest, RandomInstances) {
  std::mt19937_64 rng(32);
  GuaranteeStats stats;
  for (int trial = 0; trial < 1500; ++trial) {
    const int big_d = 7 * Uniform(rng, 1, 4) * (Uniform(rng, 0, 1) + 1);
    const CrossingInstance inst =
        trial % 2 ? testing::RandomSmallBig(rng, Uniform(rng, 1, 12), big_d / 7)
                  : testing::RandomPairs(rng, Uniform(rng, 1, 12), big_d);
    const Scaled opt = DpMinIncrease(inst).t_star;
    const Rational d = inst.max_demand.ToRational();

    const SolveReport ssw = SswThreeHalves(inst);
    ExpectConsistent(inst, ssw);
    ASSERT_GE(ssw.perf, opt);
    ASSERT_LE(ssw.perf.ToRational(), d * Rational(3, 2));

    const SolveReport best = Solve1914(inst);
    ExpectConsistent(inst, best);
    ASSERT_GE(best.perf, opt);
    ASSERT_LE(best.perf.ToRational(), d * Rational(19, 14));
    ++stats.cases;

    if (auto any = PickMediumDemand(inst, false); any && any->delta > Rational(0)) {
      const SolveReport med = MediumDemandSolve(inst, any->index, any->delta);
      ExpectConsistent(inst, med);
      ASSERT_LE(med.perf.ToRational(),
                (Rational(3, 2) - any->delta * Rational(1, 2)) * d);
      ++stats.medium;
    }
    if (!PickMediumDemand(inst, true)) {
      const SolveReport sb = SmallBigSolve(inst);
      ASSERT_EQ(sb.branch, best.branch);
      ++stats.smallbig;
    }
  }
  EXPECT_GT(stats.medium, 500);
  EXPECT_GT(stats.smallbig, 400);
}

// Every small/big branch gets exercised somewhere in a large sample.
TEST(GuaranteeTest, SmallBigBranchCoverage) {
  std::mt19937_64 rng(33);
  std::set<Branch> seen;
  for (int trial = 0; trial < 200000 && seen.size() < 6; ++trial) {
    const CrossingInstance inst =
        testing::RandomSmallBig(rng, Uniform(rng, 1, 14), Uniform(rng, 1, 6));
    const SolveReport r = SmallBigSolve(inst);
    ASSERT_LE(r.perf.ToRational(), inst.max_demand.ToRational() * Rational(19, 14));
    seen.insert(r.branch);
  }
  EXPECT_EQ(seen.size(), 6u);
}

// Reduction, 19/14 solve and lifting on rings with arbitrary splits.
TEST(GuaranteeTest, LiftedSolutions) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 800; ++trial) {
    auto [inst, split] =
        testing::RandomRing(rng, Uniform(rng, 2, 12), Uniform(rng, 1, 12), 9);
    const Reduction red = ReduceToCrossing(inst, split);
    if (red.crossing.m() == 0) continue;
    const SolveReport r = Solve1914(red.crossing);
    const UnsplitRouting lifted = LiftSolution(red.crossing, r.z);
    const Scaled increase = AdditiveIncrease(inst, split, lifted);
    ASSERT_LE(increase, r.perf);
    ASSERT_LE(increase.ToRational(),
              red.crossing.max_demand.ToRational() * Rational(19, 14));
    ASSERT_EQ(AdditiveIncrease(inst, red.uncrossed, lifted), r.perf);
  }
}

}  // namespace
}  // namespace ringload
