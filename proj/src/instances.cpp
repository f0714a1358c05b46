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

#include "ringload/instances.hpp"

#include <algorithm>
#include <random>

#include "ringload/exact.hpp"

namespace ringload {

namespace {

using VuList = std::vector<std::pair<int, int>>;

const VuList kFig2 = {{3, 3}, {4, 6}, {4, 4}, {6, 4},
                      {3, 3}, {6, 4}, {3, 1}, {6, 4}};
const VuList kFig5 = {{71, 23}, {25, 75}, {71, 21}, {23, 77},
                      {75, 21}, {76, 24}, {21, 73}, {75, 25},
                      {21, 71}, {73, 27}, {25, 71}, {33, 67}};
const VuList kFig6 = {{2, 2}, {3, 7}, {7, 1}, {3, 7},
                      {2, 2}, {4, 6}, {4, 4}, {6, 4}};

LabeledInstance FromPairs(const VuList& vu, int max_demand) {
  auto [inst, split] = ToRing(
      CrossingInstance::Standalone(PairsFromVu(vu), Scaled::FromInt(max_demand)));
  return {std::move(inst), std::move(split)};
}

LabeledInstance Fig1() {
  RingInstance inst;
  inst.n = 4;
  inst.demands = {{1, 3, Scaled::FromInt(2)}, {2, 4, Scaled::FromInt(2)}};
  return {inst, SplitRouting{{Scaled::FromInt(1), Scaled::FromInt(1)}}};
}

LabeledInstance Fig7() {
  LabeledInstance base = FromPairs(kFig2, 10);
  Extension ext = EqualizeExtension(base.instance, base.split);
  return {std::move(ext.instance), std::move(ext.split)};
}

LabeledInstance Fig8() {
  LabeledInstance out;
  out.instance.n = 16;
  // Diameters (i, i+8) with their (cw, ccw) split.
  const VuList diameters = {{6, 4}, {4, 4}, {4, 6}, {2, 2},
                            {3, 7}, {7, 1}, {3, 7}, {2, 2}};
  for (int i = 1; i <= 8; ++i) {
    auto [cw, ccw] = diameters[i - 1];
    out.instance.demands.push_back({i, i + 8, Scaled::FromInt(cw + ccw)});
    out.split.cw.push_back(Scaled::FromInt(cw));
  }
  struct Short { int i, j, d; };
  const Short shorts[] = {{5, 6, 10}, {13, 14, 4}, {6, 7, 4},  {14, 15, 10},
                          {1, 3, 4},  {9, 11, 10}, {3, 5, 6},  {11, 13, 8},
                          {7, 9, 8},  {1, 15, 6}};
  for (const Short& s : shorts) {
    Demand dem{s.i, s.j, Scaled::FromInt(s.d)};
    out.instance.demands.push_back(dem);
    bool clockwise_short = s.j - s.i <= out.instance.n / 2;
    out.split.cw.push_back(clockwise_short ? dem.d : Scaled());
  }
  return out;
}

void Check(bool ok, std::string_view name, const std::string& what) {
  if (!ok) {
    throw Error(ErrorCode::kInternalGuaranteeViolation,
                std::string(name) + " transcription check failed: " + what);
  }
}

bool Uniform(const LoadVector& loads, Scaled level) {
  return std::all_of(loads.begin(), loads.end(),
                     [&](Scaled s) { return s == level; });
}

void SelfCheck(std::string_view name, const LabeledInstance& li) {
  const LoadVector loads = EdgeLoads(li.instance, li.split);
  if (name == "fig1") {
    Check(Uniform(loads, Scaled::FromInt(2)), name, "split loads not 2");
  } else if (name == "fig2") {
    Scaled top = MaxLoad(loads);
    std::vector<std::size_t> at;
    for (std::size_t e = 0; e < loads.size(); ++e) {
      if (loads[e] == top) at.push_back(e + 1);
    }
    Check(top == Scaled::FromInt(37) && at == std::vector<std::size_t>{2, 3},
          name, "max split load 37 on edges 2 and 3 expected");
  } else if (name == "fig5") {
    Scaled sum_u;
    bool even = true;
    for (std::size_t k = 0; k < li.instance.demands.size(); ++k) {
      sum_u += li.split.cw[k];
      even = even && li.instance.demands[k].d.ToInt() % 2 == 0;
    }
    Check(sum_u == Scaled::FromInt(575) && even, name,
          "sum of u must be 575 with every u + v even");
  } else if (name == "fig6") {
    Check(BruteForceMinIncrease(li.instance, li.split).value ==
              Scaled::FromInt(11),
          name, "minimum increase over all routings must be 11");
  } else if (name == "fig7") {
    Check(Uniform(loads, Scaled::FromInt(37)), name, "loads not uniform 37");
  } else if (name == "fig8") {
    Check(CertifySplitOptimal(li.instance, li.split) == Scaled::FromInt(39),
          name, "split routing not certified at 39");
  }
}

}  // namespace

const std::vector<std::string>& BuiltinNames() {
  static const std::vector<std::string> names = {"fig1", "fig2", "fig5",
                                                 "fig6", "fig7", "fig8"};
  return names;
}

std::vector<CrossingPair> PairsFromVu(const VuList& vu) {
  std::vector<CrossingPair> pairs;
  pairs.reserve(vu.size());
  for (auto [v, u] : vu) {
    pairs.push_back({Scaled::FromInt(u), Scaled::FromInt(v)});
  }
  return pairs;
}

std::vector<CrossingPair> BuiltinPairs(std::string_view name) {
  if (name == "fig2") return PairsFromVu(kFig2);
  if (name == "fig5") return PairsFromVu(kFig5);
  if (name == "fig6") return PairsFromVu(kFig6);
  throw Error(ErrorCode::kUnknownName,
              "no crossing-form builtin named '" + std::string(name) + "'");
}

LabeledInstance Builtin(std::string_view name) {
  LabeledInstance li;
  if (name == "fig1") {
    li = Fig1();
  } else if (name == "fig2") {
    li = FromPairs(kFig2, 10);
  } else if (name == "fig5") {
    li = FromPairs(kFig5, 100);
  } else if (name == "fig6") {
    li = FromPairs(kFig6, 10);
  } else if (name == "fig7") {
    li = Fig7();
  } else if (name == "fig8") {
    li = Fig8();
  } else {
    throw Error(ErrorCode::kUnknownName,
                "unknown instance '" + std::string(name) + "'");
  }
  SelfCheck(name, li);
  return li;
}

Extension EqualizeExtension(const RingInstance& inst,
                            const SplitRouting& split) {
  RequireValid(inst, &split);
  const LoadVector loads = EdgeLoads(inst, split);
  Extension ext;
  ext.instance = inst;
  ext.split = split;
  ext.level = MaxLoad(loads);
  const Scaled d_max = inst.max_demand();
  for (int e = 1; e <= inst.n; ++e) {
    Scaled gap = ext.level - loads[e - 1];
    if (gap == Scaled()) continue;
    if (e < inst.n) {
      ext.instance.demands.push_back({e, e + 1, gap});
      ext.split.cw.push_back(gap);
    } else {
      ext.instance.demands.push_back({1, inst.n, gap});
      ext.split.cw.push_back(Scaled());
    }
    ++ext.added;
    ext.max_added = std::max(ext.max_added, gap);
    ext.within_max_demand = ext.within_max_demand && gap <= d_max;
  }
  return ext;
}

std::optional<Scaled> CertifySplitOptimal(const RingInstance& inst,
                                          const SplitRouting& split) {
  RequireValid(inst, &split);
  for (std::size_t k = 0; k < inst.demands.size(); ++k) {
    const Demand& dem = inst.demands[k];
    const int cw_len = ClockwiseLength(inst.n, dem);
    const int ccw_len = CounterclockwiseLength(inst.n, dem);
    const Scaled cw = split.cw[k];
    const Scaled ccw = dem.d - cw;
    if (cw > Scaled() && cw_len > ccw_len) return std::nullopt;
    if (ccw > Scaled() && ccw_len > cw_len) return std::nullopt;
  }
  const LoadVector loads = EdgeLoads(inst, split);
  if (loads.empty() || !Uniform(loads, loads.front())) return std::nullopt;
  return loads.front();
}

bool IsStructured(const std::vector<CrossingPair>& pairs, Scaled max_demand) {
  std::int64_t sum_u = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const CrossingPair& p = pairs[k];
    if (!p.u.is_integral() || !p.v.is_integral()) return false;
    if (p.u <= Scaled() || p.v <= Scaled()) return false;
    if (p.d().ToInt() % 2 != 0 || p.d() > max_demand) return false;
    if (k % 2 == 1 && p.d() != max_demand) return false;
    sum_u += p.u.ToInt();
  }
  return sum_u % 2 != 0;
}

CrossingInstance RandomCrossing(int m, int max_demand, std::uint64_t seed,
                                bool structured) {
  if (m < 1 || max_demand < 2) {
    throw Error(ErrorCode::kInfeasibleParams, "need m >= 1 and D >= 2");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<std::pair<int, int>> ud(m);  // (u, d)
  if (!structured) {
    for (auto& [u, d] : ud) {
      d = uniform(2, max_demand);
      u = uniform(1, d - 1);
    }
    auto& [u, d] = ud[uniform(0, m - 1)];
    d = max_demand;
    u = uniform(1, d - 1);
  } else {
    if (max_demand % 2 != 0) {
      throw Error(ErrorCode::kInfeasibleParams,
                  "structured family needs an even D, got " +
                      std::to_string(max_demand));
    }
    if (max_demand == 2 && m % 2 == 0) {
      throw Error(ErrorCode::kInfeasibleParams,
                  "D = 2 with even m cannot have an odd sum of u");
    }
    for (int k = 0; k < m; ++k) {
      auto& [u, d] = ud[k];
      d = k % 2 == 1 ? max_demand : 2 * uniform(1, max_demand / 2);
      u = uniform(1, d - 1);
    }
    int sum_u = 0;
    std::vector<int> adjustable;
    for (int k = 0; k < m; ++k) {
      sum_u += ud[k].first;
      if (ud[k].second >= 4) adjustable.push_back(k);
    }
    if (sum_u % 2 == 0) {
      auto& [u, d] =
          ud[adjustable[uniform(0, static_cast<int>(adjustable.size()) - 1)]];
      u = u < d - 1 ? u + 1 : u - 1;
    }
  }
  std::vector<CrossingPair> pairs;
  for (auto [u, d] : ud) {
    pairs.push_back({Scaled::FromInt(u), Scaled::FromInt(d - u)});
  }
  return CrossingInstance::Standalone(std::move(pairs),
                                      Scaled::FromInt(max_demand));
}

}  // namespace ringload
