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

#include "ringload/instance_io.hpp"
#include "ringload/ring_model.hpp"
#include "test_support.hpp"

namespace ringload {
namespace {

using testing::Q;
using testing::S;
using testing::Strings;

constexpr Direction kCw = Direction::kClockwise;
constexpr Direction kCcw = Direction::kCounterclockwise;

RingInstance Fig1() {
  return RingInstance{4, {{1, 3, S(2)}, {2, 4, S(2)}}};
}

ErrorCode ViolationCode(const RingInstance& inst, const SplitRouting* split) {
  auto v = ValidateInstance(inst, split);
  return v ? v->code : ErrorCode::kInternalGuaranteeViolation;
}

TEST(ValidateTest, AcceptsFigureOne) {
  SplitRouting split{{S(1), S(1)}};
  EXPECT_FALSE(ValidateInstance(Fig1(), &split).has_value());
}

TEST(ValidateTest, ReportsFirstViolation) {
  RingInstance inst = Fig1();
  inst.demands.push_back({1, 5, S(2)});
  EXPECT_EQ(ViolationCode(inst, nullptr), ErrorCode::kNodeOutOfRange);

  inst = Fig1();
  inst.demands[1].d = S(-1);
  EXPECT_EQ(ViolationCode(inst, nullptr), ErrorCode::kNegativeDemand);

  SplitRouting over{{S(3), S(1)}};
  EXPECT_EQ(ViolationCode(Fig1(), &over), ErrorCode::kSplitExceedsDemand);

  SplitRouting short_split{{S(1)}};
  EXPECT_EQ(ViolationCode(Fig1(), &short_split), ErrorCode::kIndexMismatch);

  inst = Fig1();
  inst.demands[0] = {3, 1, S(2)};
  EXPECT_EQ(ViolationCode(inst, nullptr), ErrorCode::kNodeOutOfRange);
}

TEST(EdgeLoadsTest, FigureOneSplitIsUniform) {
  SplitRouting split{{S(1), S(1)}};
  EXPECT_EQ(Strings(EdgeLoads(Fig1(), split)),
            (std::vector<std::string>{"2", "2", "2", "2"}));
}

TEST(EdgeLoadsTest, FigureOneUnsplitMatchesOracle) {
  UnsplitRouting r{{kCcw, kCw}};
  const LoadVector loads = EdgeLoads(Fig1(), r);
  EXPECT_EQ(Strings(loads), (std::vector<std::string>{"0", "2", "4", "2"}));
  EXPECT_EQ(MaxLoad(loads), S(4));
}

TEST(AdditiveIncreaseTest, FigureOne) {
  SplitRouting split{{S(1), S(1)}};
  EXPECT_EQ(AdditiveIncrease(Fig1(), split, UnsplitRouting{{kCcw, kCw}}), S(2));
  EXPECT_EQ(AdditiveIncrease(Fig1(), split, UnsplitRouting{{kCw, kCcw}}), S(2));
}

TEST(AdditiveIncreaseTest, UnsplittableSplitAgainstItself) {
  RingInstance inst{5, {{1, 3, S(4)}, {2, 5, S(3)}, {1, 2, S(0)}}};
  SplitRouting split{{S(4), S(0), S(0)}};
  auto as_unsplit = AsUnsplit(inst, split);
  ASSERT_TRUE(as_unsplit.has_value());
  EXPECT_EQ(AdditiveIncrease(inst, split, *as_unsplit), S(0));
  EXPECT_EQ(AsSplit(inst, *as_unsplit), split);
}

TEST(AdditiveIncreaseTest, DrivenByTheSingleRisingEdge) {
  RingInstance inst{4, {{1, 2, S(2)}}};
  SplitRouting split{{S(0)}};  // all on the long way round
  EXPECT_EQ(Strings(EdgeLoads(inst, UnsplitRouting{{kCw}})),
            (std::vector<std::string>{"2", "0", "0", "0"}));
  EXPECT_EQ(AdditiveIncrease(inst, split, UnsplitRouting{{kCw}}), S(2));
  EXPECT_EQ(AdditiveIncrease(inst, split, UnsplitRouting{{kCcw}}), S(0));
}

TEST(LoadPropertyTest, ConservationOnRandomInstances) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::Uniform(rng, 2, 12);
    auto [inst, split] = testing::RandomRing(rng, n, testing::Uniform(rng, 0, 8), 9);
    Scaled lhs;
    for (Scaled s : EdgeLoads(inst, split)) lhs += s;
    Scaled rhs;
    for (std::size_t t = 0; t < inst.demands.size(); ++t) {
      const Demand& dem = inst.demands[t];
      rhs += split.cw[t] * ClockwiseLength(n, dem) +
             (dem.d - split.cw[t]) * CounterclockwiseLength(n, dem);
    }
    ASSERT_EQ(lhs, rhs) << "trial " << trial;
  }
}

TEST(LoadPropertyTest, IncreaseIsMaxOfPointwiseDifference) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto [inst, split] = testing::RandomRing(rng, 7, 5, 6);
    UnsplitRouting r;
    for (std::size_t t = 0; t < inst.demands.size(); ++t) {
      r.dirs.push_back(testing::Uniform(rng, 0, 1) ? kCw : kCcw);
    }
    const LoadVector a = EdgeLoads(inst, r), b = EdgeLoads(inst, split);
    Scaled best = a[0] - b[0];
    for (std::size_t e = 1; e < a.size(); ++e) best = std::max(best, a[e] - b[e]);
    ASSERT_EQ(AdditiveIncrease(inst, split, r), best);
  }
}

TEST(InstanceIoTest, ParsesFigureOneDocument) {
  const InstanceDocument doc = ParseInstance(R"({"n": 4, "demands": [
      {"i": 1, "j": 3, "d": 2, "cw": 1}, {"i": 2, "j": 4, "d": 2, "cw": 1}]})");
  EXPECT_EQ(doc.instance, Fig1());
  ASSERT_TRUE(doc.split.has_value());
  EXPECT_EQ(doc.split->cw, (std::vector<Scaled>{S(1), S(1)}));
}

TEST(InstanceIoTest, SplitIsOptional) {
  const InstanceDocument doc = ParseInstance(
      R"({"n": 4, "demands": [{"i": 1, "j": 3, "d": 2}]})");
  EXPECT_FALSE(doc.split.has_value());
}

TEST(InstanceIoTest, HalfSplitsRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto [inst, split] = testing::RandomRing(rng, 9, 6, 7);
    const InstanceDocument doc = ParseInstance(WriteInstance(inst, &split));
    ASSERT_EQ(doc.instance, inst);
    ASSERT_EQ(doc.split, split);
    const InstanceDocument bare = ParseInstance(WriteInstance(inst));
    ASSERT_EQ(bare.instance, inst);
    ASSERT_FALSE(bare.split.has_value());
  }
  const InstanceDocument doc = ParseInstance(
      R"({"n": 4, "demands": [{"i": 1, "j": 3, "d": 3, "cw": 1.5}]})");
  EXPECT_EQ(doc.split->cw[0], Q(3, 2));
}

ErrorCode ParseCode(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalGuaranteeViolation;
}

TEST(InstanceIoTest, Errors) {
  EXPECT_EQ(ParseCode("{\"n\": 4,"), ErrorCode::kSyntaxError);
  EXPECT_EQ(ParseCode(R"({"demands": []})"), ErrorCode::kSchemaError);
  EXPECT_EQ(ParseCode(R"({"n": "4", "demands": []})"), ErrorCode::kSchemaError);
  EXPECT_EQ(ParseCode(R"({"n": 4, "demands": [{"i": 1, "j": 3}]})"),
            ErrorCode::kSchemaError);
  EXPECT_EQ(ParseCode(R"({"n": 4, "demands": [{"i": 1, "j": 3, "d": 2.5}]})"),
            ErrorCode::kSchemaError);
  EXPECT_EQ(ParseCode(R"({"n": 4, "demands": [{"i": 1, "j": 3, "d": 2, "cw": 0.3}]})"),
            ErrorCode::kSchemaError);
  EXPECT_EQ(ParseCode(R"({"n": 4, "demands": [{"i": 1, "j": 3, "d": 2, "cw": 1},
                                              {"i": 2, "j": 4, "d": 2}]})"),
            ErrorCode::kSchemaError);
  EXPECT_EQ(ParseCode(R"({"n": 4, "demands": [{"i": 1, "j": 5, "d": 2}]})"),
            ErrorCode::kNodeOutOfRange);
  EXPECT_EQ(ParseCode(R"({"n": 4, "demands": [{"i": 1, "j": 3, "d": 2, "cw": 3}]})"),
            ErrorCode::kSplitExceedsDemand);
}

TEST(InstanceIoTest, RoutingOutputUsesExactStrings) {
  SplitRouting split{{S(1), S(1)}};
  UnsplitRouting r{{kCcw, kCw}};
  const std::string text =
      WriteRouting(r, AdditiveIncrease(Fig1(), split, r), EdgeLoads(Fig1(), r));
  EXPECT_NE(text.find("\"max_increase\": \"2\""), std::string::npos) << text;
  EXPECT_NE(text.find("\"ccw\""), std::string::npos);
  EXPECT_EQ(text.find('.'), std::string::npos);
}

}  // namespace
}  // namespace ringload
