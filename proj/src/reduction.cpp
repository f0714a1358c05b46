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

#include "ringload/reduction.hpp"

#include <algorithm>
#include <cassert>

namespace ringload {

bool CrossingInstance::is_integral() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const CrossingPair& p) {
    return p.u.is_integral() && p.v.is_integral();
  });
}

CrossingInstance CrossingInstance::Standalone(std::vector<CrossingPair> pairs,
                                              Scaled max_demand) {
  CrossingInstance out;
  out.pairs = std::move(pairs);
  out.max_demand = max_demand;
  const int n = 2 * static_cast<int>(out.pairs.size());
  out.backmap.resize(n);
  for (int e = 0; e < n; ++e) out.backmap[e].reduced_edge = e + 1;
  out.source.resize(out.pairs.size());
  for (std::size_t k = 0; k < out.source.size(); ++k) out.source[k] = k;
  return out;
}

bool DemandsCross(int n, const Demand& a, const Demand& b) {
  (void)n;
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
  auto inside = [&](int node) { return a.i < node && node < a.j; };
  return inside(b.i) != inside(b.j);
}

namespace {

// Edge mask (0-based edge k-1 for edge k) of one path of a demand.
std::vector<bool> PathEdges(int n, const Demand& dem, Direction dir) {
  std::vector<bool> mask(n, dir == Direction::kCounterclockwise);
  for (int k = dem.i; k < dem.j; ++k) {
    mask[k - 1] = dir == Direction::kClockwise;
  }
  return mask;
}

bool Disjoint(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] && b[k]) return false;
  }
  return true;
}

Scaled FlowOn(const Demand& dem, Scaled cw, Direction dir) {
  return dir == Direction::kClockwise ? cw : dem.d - cw;
}

bool IsSplit(const Demand& dem, Scaled cw) {
  return Scaled() < cw && cw < dem.d;
}

}  // namespace

SplitRouting UncrossPair(const RingInstance& inst, const SplitRouting& split,
                         std::size_t a, std::size_t b) {
  if (a == b || a >= inst.demands.size() || b >= inst.demands.size()) {
    throw Error(ErrorCode::kIndexMismatch, "bad demand pair for uncrossing");
  }
  if (a > b) std::swap(a, b);
  const Demand& da = inst.demands[a];
  const Demand& db = inst.demands[b];
  if (DemandsCross(inst.n, da, db)) {
    throw Error(ErrorCode::kNotParallel, "demands " + std::to_string(a) +
                                             " and " + std::to_string(b) +
                                             " cross");
  }
  // Prefer the clockwise arc for the lower-indexed demand.
  constexpr Direction kOrder[2] = {Direction::kClockwise,
                                   Direction::kCounterclockwise};
  for (Direction dir_a : kOrder) {
    for (Direction dir_b : kOrder) {
      if (!Disjoint(PathEdges(inst.n, da, dir_a),
                    PathEdges(inst.n, db, dir_b))) {
        continue;
      }
      Scaled shift = std::min(FlowOn(da, split.cw[a], Opposite(dir_a)),
                              FlowOn(db, split.cw[b], Opposite(dir_b)));
      SplitRouting out = split;
      out.cw[a] += dir_a == Direction::kClockwise ? shift : -shift;
      out.cw[b] += dir_b == Direction::kClockwise ? shift : -shift;
      return out;
    }
  }
  throw Error(ErrorCode::kNotParallel, "no edge-disjoint path pair");
}

Reduction ReduceToCrossing(const RingInstance& inst, const SplitRouting& split) {
  RequireValid(inst, &split);
  const std::size_t count = inst.demands.size();
  Reduction out;
  out.uncrossed = split;
  SplitRouting& cur = out.uncrossed;

  // Lexicographic scan, restarting after every change. Each change makes at
  // least one more demand unsplittable, so this terminates.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < count && !changed; ++a) {
      if (!IsSplit(inst.demands[a], cur.cw[a])) continue;
      for (std::size_t b = a + 1; b < count && !changed; ++b) {
        if (!IsSplit(inst.demands[b], cur.cw[b])) continue;
        if (DemandsCross(inst.n, inst.demands[a], inst.demands[b])) continue;
        cur = UncrossPair(inst, cur, a, b);
        changed = true;
      }
    }
  }

  CrossingInstance& cross = out.crossing;
  cross.max_demand = inst.max_demand();
  RingInstance fixed_part{inst.n, {}};
  SplitRouting fixed_split;
  std::vector<std::size_t> remaining;
  for (std::size_t t = 0; t < count; ++t) {
    const Demand& dem = inst.demands[t];
    if (IsSplit(dem, cur.cw[t])) {
      remaining.push_back(t);
      continue;
    }
    Direction dir = cur.cw[t] == dem.d ? Direction::kClockwise
                                       : Direction::kCounterclockwise;
    cross.fixed.push_back({t, dir});
    fixed_part.demands.push_back(dem);
    fixed_split.cw.push_back(cur.cw[t]);
  }
  LoadVector base = EdgeLoads(fixed_part, fixed_split);

  // Contract every node that is not an endpoint of a remaining demand.
  std::vector<int> endpoints;
  for (std::size_t t : remaining) {
    endpoints.push_back(inst.demands[t].i);
    endpoints.push_back(inst.demands[t].j);
  }
  std::sort(endpoints.begin(), endpoints.end());
  assert(std::adjacent_find(endpoints.begin(), endpoints.end()) ==
         endpoints.end());
  const std::size_t m = remaining.size();
  auto position = [&](int node) {
    return static_cast<std::size_t>(
        std::lower_bound(endpoints.begin(), endpoints.end(), node) -
        endpoints.begin());
  };

  cross.pairs.resize(m);
  cross.source.resize(m);
  for (std::size_t t : remaining) {
    const Demand& dem = inst.demands[t];
    std::size_t pi = position(dem.i);
    [[maybe_unused]] std::size_t pj = position(dem.j);
    assert(pj == pi + m);
    cross.pairs[pi] = {cur.cw[t], dem.d - cur.cw[t]};
    cross.source[pi] = t;
  }

  cross.backmap.resize(inst.n);
  for (int e = 1; e <= inst.n; ++e) {
    EdgeImage& img = cross.backmap[e - 1];
    img.base = base[e - 1];
    if (m == 0) continue;
    // Reduced edge p spans original edges q_p .. q_{p+1}-1; the last reduced
    // edge wraps around from q_{2m} through node n to q_1.
    auto above = std::upper_bound(endpoints.begin(), endpoints.end(), e);
    std::size_t p = static_cast<std::size_t>(above - endpoints.begin());
    img.reduced_edge = p == 0 ? static_cast<int>(2 * m) : static_cast<int>(p);
  }
  return out;
}

UnsplitRouting LiftSolution(const CrossingInstance& cross,
                            const UnsplitRouting& z) {
  if (z.dirs.size() != cross.m()) {
    throw Error(ErrorCode::kLengthMismatch,
                "z has " + std::to_string(z.dirs.size()) + " entries, m = " +
                    std::to_string(cross.m()));
  }
  UnsplitRouting out;
  out.dirs.assign(cross.original_demand_count(), Direction::kClockwise);
  for (const FixedDemand& f : cross.fixed) out.dirs[f.index] = f.dir;
  for (std::size_t k = 0; k < cross.m(); ++k) {
    out.dirs[cross.source[k]] = z.dirs[k];
  }
  return out;
}

LoadVector CrossingEdgeLoads(const std::vector<CrossingPair>& pairs) {
  const std::size_t m = pairs.size();
  Scaled total_v;
  for (const CrossingPair& p : pairs) total_v += p.v;
  LoadVector loads(2 * m);
  Scaled prefix_u, prefix_v;
  for (std::size_t k = 1; k <= m; ++k) {
    prefix_u += pairs[k - 1].u;
    prefix_v += pairs[k - 1].v;
    loads[k - 1] = prefix_u + (total_v - prefix_v);
  }
  Scaled total_u;
  for (const CrossingPair& p : pairs) total_u += p.u;
  prefix_u = prefix_v = Scaled();
  for (std::size_t k = 1; k <= m; ++k) {
    prefix_u += pairs[k - 1].u;
    prefix_v += pairs[k - 1].v;
    loads[k + m - 1] = prefix_v + (total_u - prefix_u);
  }
  return loads;
}

std::pair<RingInstance, SplitRouting> ToRing(const CrossingInstance& cross) {
  const int m = static_cast<int>(cross.m());
  RingInstance inst{2 * m, {}};
  SplitRouting split;
  for (int k = 1; k <= m; ++k) {
    const CrossingPair& p = cross.pairs[k - 1];
    inst.demands.push_back({k, k + m, p.d()});
    split.cw.push_back(p.u);
  }
  return {std::move(inst), std::move(split)};
}

}  // namespace ringload
