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

// Helpers shared by the unit tests.

#ifndef RINGLOAD_TESTS_TEST_SUPPORT_HPP_
#define RINGLOAD_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ringload/pattern.hpp"

namespace ringload::testing {

inline Scaled S(std::int64_t v) { return Scaled::FromInt(v); }
inline Scaled Q(std::int64_t num, std::int64_t den) {
  return Scaled::FromRational(Rational(num, den));
}

// Pairs from (u, v) integers.
inline std::vector<CrossingPair> UV(
    const std::vector<std::pair<int, int>>& uv) {
  std::vector<CrossingPair> out;
  for (auto [u, v] : uv) out.push_back({S(u), S(v)});
  return out;
}

inline CrossingInstance Cross(const std::vector<std::pair<int, int>>& uv,
                              int max_demand) {
  return CrossingInstance::Standalone(UV(uv), S(max_demand));
}

inline std::vector<Scaled> Points(const std::vector<std::int64_t>& xs) {
  std::vector<Scaled> out;
  for (auto x : xs) out.push_back(S(x));
  return out;
}

inline std::vector<std::string> Strings(const std::vector<Scaled>& xs) {
  std::vector<std::string> out;
  for (Scaled x : xs) out.push_back(x.ToString());
  return out;
}

// Performance evaluated edge by edge: change on edge k is
// sum_{i<=k} z_i - sum_{i>k} z_i.
inline Scaled DirectPerformance(const CrossingInstance& cross,
                                const UnsplitRouting& z) {
  std::vector<Scaled> steps;
  for (std::size_t k = 0; k < cross.m(); ++k) {
    steps.push_back(z.dirs[k] == Direction::kClockwise ? cross.pairs[k].v
                                                       : -cross.pairs[k].u);
  }
  Scaled best;
  for (std::size_t k = 1; k <= steps.size(); ++k) {
    Scaled change;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      change += i < k ? steps[i] : -steps[i];
    }
    best = std::max(best, Abs(change));
  }
  return best;
}

inline int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random crossing instance with integral u, v >= 1, d <= D, max d = D.
inline CrossingInstance RandomPairs(std::mt19937_64& rng, int m,
                                    int max_demand) {
  std::vector<std::pair<int, int>> uv;
  for (int k = 0; k < m; ++k) {
    int d = Uniform(rng, 2, max_demand);
    int u = Uniform(rng, 1, d - 1);
    uv.emplace_back(u, d - u);
  }
  int k = Uniform(rng, 0, m - 1);
  int u = Uniform(rng, 1, max_demand - 1);
  uv[k] = {u, max_demand - u};
  return Cross(uv, max_demand);
}

// Every demand small (<= 2D/7) or big (>= 5D/7). D is a multiple of 7 so
// both ranges hold integers.
inline CrossingInstance RandomSmallBig(std::mt19937_64& rng, int m,
                                       int sevenths) {
  const int big_d = 7 * sevenths;
  std::vector<std::pair<int, int>> uv;
  for (int k = 0; k < m; ++k) {
    int d = Uniform(rng, 0, 1) == 0 ? Uniform(rng, 2, 2 * sevenths)
                                    : Uniform(rng, 5 * sevenths, big_d);
    int u = Uniform(rng, 1, d - 1);
    uv.emplace_back(u, d - u);
  }
  uv[Uniform(rng, 0, m - 1)] = {sevenths, big_d - sevenths};
  return Cross(uv, big_d);
}

// Random ring instance with integer demands and integral or half splits.
inline std::pair<RingInstance, SplitRouting> RandomRing(std::mt19937_64& rng,
                                                        int n, int k,
                                                        int max_demand) {
  RingInstance inst;
  inst.n = n;
  SplitRouting split;
  for (int t = 0; t < k; ++t) {
    int i = Uniform(rng, 1, n - 1);
    int j = Uniform(rng, i + 1, n);
    int d = Uniform(rng, 0, max_demand);
    inst.demands.push_back({i, j, S(d)});
    split.cw.push_back(Q(Uniform(rng, 0, 2 * d), 2));
  }
  return {inst, split};
}

}  // namespace ringload::testing

#endif  // RINGLOAD_TESTS_TEST_SUPPORT_HPP_
