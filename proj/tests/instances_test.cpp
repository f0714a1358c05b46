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

#include <algorithm>
#include <string>

#include "ringload/exact.hpp"
#include "ringload/instances.hpp"
#include "test_support.hpp"

namespace ringload {
namespace {

using testing::S;
using testing::Strings;

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalGuaranteeViolation;
}

std::vector<std::string> Ints(const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(std::to_string(x));
  return out;
}

TEST(BuiltinTest, Names) {
  EXPECT_EQ(BuiltinNames(), (std::vector<std::string>{"fig1", "fig2", "fig5",
                                                      "fig6", "fig7", "fig8"}));
  for (const std::string& name : BuiltinNames()) {
    const LabeledInstance b = Builtin(name);
    EXPECT_FALSE(ValidateInstance(b.instance, &b.split).has_value()) << name;
  }
  EXPECT_EQ(CodeOf([] { Builtin("fig3"); }), ErrorCode::kUnknownName);
  EXPECT_EQ(CodeOf([] { BuiltinPairs("fig1"); }), ErrorCode::kUnknownName);
  EXPECT_EQ(CodeOf([] { BuiltinPairs("fig7"); }), ErrorCode::kUnknownName);
}

TEST(BuiltinTest, Sizes) {
  EXPECT_EQ(Builtin("fig1").instance.n, 4);
  EXPECT_EQ(Builtin("fig1").instance.demands.size(), 2u);
  EXPECT_EQ(Builtin("fig2").instance.n, 16);
  EXPECT_EQ(Builtin("fig5").instance.n, 24);
  EXPECT_EQ(Builtin("fig6").instance.n, 16);
  EXPECT_EQ(Builtin("fig7").instance.demands.size(), 22u);
  EXPECT_EQ(Builtin("fig8").instance.demands.size(), 18u);
}

TEST(BuiltinTest, PairsAreVuOrdered) {
  const auto fig2 = BuiltinPairs("fig2");
  ASSERT_EQ(fig2.size(), 8u);
  EXPECT_EQ(fig2.front(), (CrossingPair{S(3), S(3)}));
  EXPECT_EQ(fig2[1], (CrossingPair{S(6), S(4)}));
  EXPECT_EQ(fig2[6], (CrossingPair{S(1), S(3)}));
  EXPECT_EQ(PairsFromVu({{7, 2}}), (std::vector<CrossingPair>{{S(2), S(7)}}));
}

TEST(BuiltinTest, SplitLoads) {
  EXPECT_EQ(Strings(EdgeLoads(Builtin("fig1").instance, Builtin("fig1").split)),
            Ints({2, 2, 2, 2}));
  const LabeledInstance f2 = Builtin("fig2");
  EXPECT_EQ(Strings(EdgeLoads(f2.instance, f2.split)),
            Ints({35, 37, 37, 35, 35, 33, 31, 29, 29, 27, 27, 29, 29, 31, 33, 35}));
  const LabeledInstance f6 = Builtin("fig6");
  EXPECT_EQ(Strings(EdgeLoads(f6.instance, f6.split)),
            Ints({31, 35, 29, 33, 33, 35, 35, 33, 33, 29, 35, 31, 31, 29, 29, 31}));
  const LabeledInstance f5 = Builtin("fig5");
  EXPECT_EQ(Strings(EdgeLoads(f5.instance, f5.split)),
            Ints({541, 591, 541, 595, 541, 489, 541, 491, 541, 495, 541, 575,
                  623, 573, 623, 569, 623, 675, 623, 673, 623, 669, 623, 589}));
}

TEST(BuiltinTest, FigureFiveShape) {
  const auto pairs = BuiltinPairs("fig5");
  Scaled sum_u;
  for (const CrossingPair& p : pairs) {
    sum_u += p.u;
    EXPECT_EQ(p.d().ToInt() % 2, 0);
    EXPECT_LE(p.d(), S(100));
  }
  EXPECT_EQ(sum_u, S(575));
}

TEST(BuiltinTest, MinimumIncreases) {
  for (auto [name, want] : {std::pair{"fig1", 2}, {"fig2", 11}, {"fig6", 11}}) {
    const LabeledInstance b = Builtin(name);
    EXPECT_EQ(BruteForceMinIncrease(b.instance, b.split).value, S(want)) << name;
  }
  const CrossingInstance f5 =
      CrossingInstance::Standalone(BuiltinPairs("fig5"), S(100));
  EXPECT_EQ(DpMinIncrease(f5).t_star, S(101));
}

TEST(BuiltinTest, OptimaOfTheLiftedInstances) {
  const LabeledInstance f7 = Builtin("fig7");
  EXPECT_EQ(CertifySplitOptimal(f7.instance, f7.split), S(37));
  EXPECT_EQ(BruteForceOptimumL(f7.instance).value, S(46));
  const LabeledInstance f8 = Builtin("fig8");
  EXPECT_EQ(CertifySplitOptimal(f8.instance, f8.split), S(39));
  EXPECT_EQ(BruteForceOptimumL(f8.instance).value, S(50));
  const LabeledInstance f1 = Builtin("fig1");
  EXPECT_EQ(CertifySplitOptimal(f1.instance, f1.split), S(2));
  EXPECT_EQ(BruteForceOptimumL(f1.instance).value, S(4));
}

TEST(CertifyTest, RejectsUnevenOrLongRoutes) {
  const LabeledInstance f2 = Builtin("fig2");
  EXPECT_FALSE(CertifySplitOptimal(f2.instance, f2.split).has_value());
  RingInstance inst;
  inst.n = 4;
  inst.demands = {{1, 2, S(1)}, {2, 3, S(1)}, {3, 4, S(1)}, {1, 4, S(1)}};
  EXPECT_EQ(CertifySplitOptimal(inst, SplitRouting{{S(1), S(1), S(1), S(0)}}),
            S(1));
  EXPECT_FALSE(
      CertifySplitOptimal(inst, SplitRouting{{S(0), S(0), S(0), S(1)}})
          .has_value());
}

TEST(ExtensionTest, FigureTwo) {
  const LabeledInstance f2 = Builtin("fig2");
  const Extension ext = EqualizeExtension(f2.instance, f2.split);
  EXPECT_EQ(ext.level, S(37));
  EXPECT_EQ(ext.added, 14u);
  EXPECT_EQ(ext.max_added, S(10));
  EXPECT_TRUE(ext.within_max_demand);
  const std::vector<int> gaps = {2, 0, 0, 2, 2, 4, 6, 8, 8, 10, 10, 8, 8, 6, 4, 2};
  const std::size_t base = f2.instance.demands.size();
  ASSERT_EQ(ext.instance.demands.size(), base + 14);
  std::size_t next = base;
  for (int e = 1; e <= 16; ++e) {
    if (gaps[e - 1] == 0) continue;
    const Demand& dem = ext.instance.demands[next];
    EXPECT_EQ(dem.d, S(gaps[e - 1]));
    if (e < 16) {
      EXPECT_EQ(dem, (Demand{e, e + 1, S(gaps[e - 1])}));
      EXPECT_EQ(ext.split.cw[next], dem.d);
    } else {
      EXPECT_EQ(dem, (Demand{1, 16, S(gaps[e - 1])}));
      EXPECT_EQ(ext.split.cw[next], S(0));
    }
    ++next;
  }
  const LoadVector loads = EdgeLoads(ext.instance, ext.split);
  EXPECT_TRUE(std::all_of(loads.begin(), loads.end(),
                          [](Scaled x) { return x == S(37); }));
  EXPECT_EQ(CertifySplitOptimal(ext.instance, ext.split), S(37));
}

TEST(ExtensionTest, FigureFiveExceedsMaxDemand) {
  const LabeledInstance f5 = Builtin("fig5");
  const Extension ext = EqualizeExtension(f5.instance, f5.split);
  EXPECT_FALSE(ext.within_max_demand);
  EXPECT_EQ(ext.max_added, S(186));
  EXPECT_EQ(ext.level, S(675));
}

TEST(ExtensionTest, UniformInputIsUnchanged) {
  const LabeledInstance f7 = Builtin("fig7");
  const Extension ext = EqualizeExtension(f7.instance, f7.split);
  EXPECT_EQ(ext.added, 0u);
  EXPECT_EQ(ext.instance, f7.instance);
  EXPECT_EQ(ext.level, S(37));
}

TEST(ExtensionTest, RandomRingsBecomeUniform) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    auto [inst, split] = testing::RandomRing(
        rng, testing::Uniform(rng, 2, 12), testing::Uniform(rng, 1, 8), 9);
    const Extension ext = EqualizeExtension(inst, split);
    const LoadVector before = EdgeLoads(inst, split);
    const LoadVector after = EdgeLoads(ext.instance, ext.split);
    ASSERT_EQ(ext.level, MaxLoad(before));
    for (Scaled x : after) ASSERT_EQ(x, ext.level);
    ASSERT_FALSE(ValidateInstance(ext.instance, &ext.split).has_value());
  }
}

TEST(RandomCrossingTest, Deterministic) {
  EXPECT_EQ(RandomCrossing(8, 10, 7, true), RandomCrossing(8, 10, 7, true));
  EXPECT_EQ(RandomCrossing(9, 13, 7, false), RandomCrossing(9, 13, 7, false));
  EXPECT_NE(RandomCrossing(8, 10, 7, true), RandomCrossing(8, 10, 8, true));
}

TEST(RandomCrossingTest, StructuredInvariants) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int m = 1 + static_cast<int>(seed % 11);
    const int big_d = 2 * (1 + static_cast<int>(seed % 7));
    if (big_d == 2 && m % 2 == 0) continue;
    const CrossingInstance c = RandomCrossing(m, big_d, seed, true);
    ASSERT_EQ(c.m(), static_cast<std::size_t>(m));
    ASSERT_TRUE(c.is_integral());
    ASSERT_TRUE(IsStructured(c.pairs, c.max_demand)) << "seed " << seed;
    std::int64_t sum_u = 0;
    for (std::size_t k = 0; k < c.m(); ++k) {
      const CrossingPair& p = c.pairs[k];
      ASSERT_GE(p.u, S(1));
      ASSERT_GE(p.v, S(1));
      ASSERT_EQ(p.d().ToInt() % 2, 0);
      if (k % 2 == 1) ASSERT_EQ(p.d(), S(big_d));
      sum_u += p.u.ToInt();
    }
    ASSERT_EQ(sum_u % 2, 1);
  }
}

TEST(RandomCrossingTest, PlainInvariants) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int m = 1 + static_cast<int>(seed % 9);
    const int big_d = 2 + static_cast<int>(seed % 13);
    const CrossingInstance c = RandomCrossing(m, big_d, seed, false);
    Scaled top;
    for (const CrossingPair& p : c.pairs) {
      ASSERT_GE(p.u, S(1));
      ASSERT_GE(p.v, S(1));
      ASSERT_LE(p.d(), S(big_d));
      top = std::max(top, p.d());
    }
    ASSERT_EQ(top, S(big_d));
  }
}

TEST(RandomCrossingTest, InfeasibleParameters) {
  EXPECT_EQ(CodeOf([] { RandomCrossing(0, 10, 1, false); }),
            ErrorCode::kInfeasibleParams);
  EXPECT_EQ(CodeOf([] { RandomCrossing(3, 1, 1, false); }),
            ErrorCode::kInfeasibleParams);
  EXPECT_EQ(CodeOf([] { RandomCrossing(8, 9, 1, true); }),
            ErrorCode::kInfeasibleParams);
  EXPECT_EQ(CodeOf([] { RandomCrossing(4, 2, 1, true); }),
            ErrorCode::kInfeasibleParams);
  EXPECT_NO_THROW(RandomCrossing(3, 2, 1, true));
  EXPECT_NO_THROW(RandomCrossing(8, 9, 1, false));
}

TEST(StructuredTest, Figures) {
  EXPECT_TRUE(IsStructured(BuiltinPairs("fig2"), S(10)));
  EXPECT_TRUE(IsStructured(BuiltinPairs("fig6"), S(10)));
  EXPECT_TRUE(IsStructured(BuiltinPairs("fig5"), S(100)));
  EXPECT_FALSE(IsStructured(BuiltinPairs("fig2"), S(12)));
  auto pairs = BuiltinPairs("fig2");
  std::swap(pairs[1].u, pairs[1].v);
  EXPECT_TRUE(IsStructured(pairs, S(10)));
  auto short_pinned = pairs;
  short_pinned[1] = {S(2), S(6)};
  EXPECT_FALSE(IsStructured(short_pinned, S(10)));
  auto even_sum = pairs;
  even_sum[0] = {S(2), S(4)};
  EXPECT_FALSE(IsStructured(even_sum, S(10)));
  auto odd_d = pairs;
  odd_d[0] = {S(3), S(4)};
  EXPECT_FALSE(IsStructured(odd_d, S(10)));
}

}  // namespace
}  // namespace ringload
