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

#include "ringload/verify.hpp"

#include <algorithm>
#include <optional>

#include "ringload/approx.hpp"
#include "ringload/instances.hpp"

namespace ringload {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string_view name) { report_.instance = name; }

  void Expect(std::string check, std::string expected, std::string actual,
              bool pass) {
    report_.checks.push_back(
        {std::move(check), std::move(expected), std::move(actual), pass});
  }
  void Equal(std::string check, Scaled expected, Scaled actual) {
    Expect(std::move(check), expected.ToString(), actual.ToString(),
           expected == actual);
  }
  void Value(std::string key, std::string value) {
    report_.values.emplace_back(std::move(key), std::move(value));
  }
  VerifyReport Take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

std::string Join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::vector<std::size_t> EdgesAt(const LoadVector& loads, Scaled level) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < loads.size(); ++e) {
    if (loads[e] == level) out.push_back(e + 1);
  }
  return out;
}

Scaled Int(std::int64_t v) { return Scaled::FromInt(v); }

std::string Certified(const std::optional<Scaled>& c) {
  return c ? c->ToString() : "none";
}

void CheckCrossingFigure(Recorder& rec, const LabeledInstance& li,
                         const BruteForceOptions& options,
                         bool exact_eleven) {
  const Reduction red = ReduceToCrossing(li.instance, li.split);
  const DpResult dp = DpMinIncrease(red.crossing);
  const ExactResult bf =
      BruteForceMinIncrease(li.instance, li.split, options);
  const Scaled big_d = red.crossing.max_demand;
  if (exact_eleven) {
    rec.Equal("dp_min_increase", big_d + Int(1), dp.t_star);
  } else {
    rec.Expect("dp_min_increase", ">= " + (big_d + Int(1)).ToString(),
               dp.t_star.ToString(), dp.t_star >= big_d + Int(1));
  }
  rec.Equal("brute_force_min_increase", dp.t_star, bf.value);
  const SolveReport s = Solve1914(red.crossing);
  const Rational cap = big_d.ToRational() * Rational(19, 14);
  rec.Expect("solve_19_14 within 19/14*D", "<= " + cap.ToString(),
             s.perf.ToString(), s.perf.ToRational() <= cap);
  rec.Expect("solve_19_14 not below optimum", ">= " + dp.t_star.ToString(),
             s.perf.ToString(), s.perf >= dp.t_star);
  rec.Value("min_increase", dp.t_star.ToString());
  rec.Value("solve_19_14", s.perf.ToString());
  rec.Value("branch", std::string(BranchName(s.branch)));
}

}  // namespace

bool VerifyReport::passes() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

VerifyReport VerifyBuiltin(std::string_view name,
                           const BruteForceOptions& options) {
  const LabeledInstance li = Builtin(name);
  const LoadVector loads = EdgeLoads(li.instance, li.split);
  Recorder rec(name);

  if (name == "fig1") {
    const auto cert = CertifySplitOptimal(li.instance, li.split);
    rec.Expect("split optimum certified", "2", Certified(cert),
               cert == Int(2));
    const ExactResult opt = BruteForceOptimumL(li.instance, options);
    rec.Equal("optimum_L", Int(4), opt.value);
    const bool doubled = cert && opt.value == *cert * 2;
    rec.Expect("L = 2 L*", "true", doubled ? "true" : "false", doubled);
    rec.Equal("brute_force_min_increase", Int(2),
              BruteForceMinIncrease(li.instance, li.split, options).value);
    rec.Value("L", opt.value.ToString());
    rec.Value("L_star", Certified(cert));
  } else if (name == "fig2") {
    const Scaled top = MaxLoad(loads);
    rec.Equal("max split load", Int(37), top);
    rec.Expect("edges at max load", "2,3", Join(EdgesAt(loads, top)),
               EdgesAt(loads, top) == std::vector<std::size_t>{2, 3});
    CheckCrossingFigure(rec, li, options, true);
  } else if (name == "fig5") {
    const Reduction red = ReduceToCrossing(li.instance, li.split);
    rec.Equal("D", Int(100), red.crossing.max_demand);
    Scaled sum_u;
    for (const CrossingPair& p : red.crossing.pairs) sum_u += p.u;
    rec.Equal("sum of u", Int(575), sum_u);
    CheckCrossingFigure(rec, li, options, false);
    const Extension ext = EqualizeExtension(li.instance, li.split);
    rec.Expect("extension exceeds D somewhere", "true",
               ext.within_max_demand ? "false" : "true",
               !ext.within_max_demand);
    rec.Value("largest_added", ext.max_added.ToString());
  } else if (name == "fig6") {
    CheckCrossingFigure(rec, li, options, true);
  } else if (name == "fig7") {
    const LabeledInstance base = Builtin("fig2");
    const Extension ext = EqualizeExtension(base.instance, base.split);
    rec.Expect("extension loads uniform", "37", ext.level.ToString(),
               ext.level == Int(37) &&
                   EdgesAt(loads, Int(37)).size() == loads.size());
    rec.Expect("added values within D", "<= 10", ext.max_added.ToString(),
               ext.within_max_demand);
    const auto cert = CertifySplitOptimal(li.instance, li.split);
    rec.Expect("split optimum certified", "37", Certified(cert),
               cert == Int(37));
    const ExactResult opt = BruteForceOptimumL(li.instance, options);
    rec.Expect("optimum_L exceeds L* by at most D", "<= 47",
               opt.value.ToString(), opt.value <= Int(47));
    rec.Value("L", opt.value.ToString());
    rec.Value("L_star", Certified(cert));
    rec.Value("added_demands", std::to_string(ext.added));
  } else if (name == "fig8") {
    const auto cert = CertifySplitOptimal(li.instance, li.split);
    rec.Expect("split optimum certified", "39", Certified(cert),
               cert == Int(39));
    const ExactResult opt = BruteForceOptimumL(li.instance, options);
    rec.Equal("optimum_L = L* + D + 1", Int(50), opt.value);
    rec.Value("L", opt.value.ToString());
    rec.Value("L_star", Certified(cert));
  }
  return rec.Take();
}

}  // namespace ringload
