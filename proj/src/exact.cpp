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

#include "ringload/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

namespace ringload {

namespace {

// Lexicographic order of direction masks, bit t set = demand t
// counterclockwise: at the first differing demand, clockwise wins.
bool LexLess(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & -diff)) == 0;
}

struct Candidate {
  std::int64_t value = std::numeric_limits<std::int64_t>::max();
  std::uint64_t mask = 0;

  void Offer(std::int64_t v, std::uint64_t m) {
    if (v < value || (v == value && LexLess(m, mask))) {
      value = v;
      mask = m;
    }
  }
};

class Enumerator {
 public:
  // Objective is max_e (load(e) - reference(e)).
  Enumerator(const RingInstance& inst, std::vector<std::int64_t> reference,
             const BruteForceOptions& options)
      : n_(inst.n), reference_(std::move(reference)), options_(options) {
    for (std::size_t t = 0; t < inst.demands.size(); ++t) {
      if (inst.demands[t].d != Scaled()) active_.push_back(t);
    }
    if (active_.size() > options.cap) {
      throw Error(ErrorCode::kTooManyDemands,
                  std::to_string(active_.size()) +
                      " nonzero demands exceed the brute-force cap of " +
                      std::to_string(options.cap));
    }
    // Per demand: load on every edge when routed clockwise, and the change
    // when flipped to counterclockwise.
    for (std::size_t t : active_) {
      const Demand& dem = inst.demands[t];
      std::vector<std::int64_t> cw(n_, 0), flip(n_, 0);
      for (int e = 1; e <= n_; ++e) {
        bool on_cw = dem.i <= e && e < dem.j;
        cw[e - 1] = on_cw ? dem.d.raw() : 0;
        flip[e - 1] = on_cw ? -dem.d.raw() : dem.d.raw();
      }
      clockwise_.push_back(std::move(cw));
      flip_.push_back(std::move(flip));
    }
    demand_count_ = inst.demands.size();
  }

  ExactResult Run() const {
    const std::size_t k = active_.size();
    unsigned workers = std::max(1u, options_.workers);
    std::size_t top = 0;
    while ((1u << (top + 1)) <= workers && top + 1 <= k) ++top;
    const std::size_t chunks = std::size_t{1} << top;

    std::vector<Candidate> results(chunks);
    if (chunks == 1) {
      results[0] = Chunk(0, top);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t c = 0; c < chunks; ++c) {
        pool.emplace_back([&, c] { results[c] = Chunk(c, top); });
      }
      for (auto& th : pool) th.join();
    }
    Candidate best;
    for (const Candidate& c : results) best.Offer(c.value, c.mask);

    ExactResult out;
    out.value = Scaled::FromRaw(best.value);
    out.routing.dirs.assign(demand_count_, Direction::kClockwise);
    for (std::size_t a = 0; a < k; ++a) {
      if (best.mask >> a & 1) {
        out.routing.dirs[active_[a]] = Direction::kCounterclockwise;
      }
    }
    return out;
  }

 private:
  // Fixes the top `top` mask bits to `prefix` and walks the remaining bits
  // in Gray-code order, one flip per step.
  Candidate Chunk(std::size_t prefix, std::size_t top) const {
    const std::size_t k = active_.size();
    const std::size_t low = k - top;
    std::vector<std::int64_t> loads(n_, 0);
    std::uint64_t mask = static_cast<std::uint64_t>(prefix) << low;
    for (std::size_t a = 0; a < k; ++a) {
      for (int e = 0; e < n_; ++e) {
        loads[e] += clockwise_[a][e];
        if (mask >> a & 1) loads[e] += flip_[a][e];
      }
    }
    Candidate best;
    best.Offer(Objective(loads), mask);
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t s = 1; s < steps; ++s) {
      const int a = std::countr_zero(s);
      const bool to_ccw = !(mask >> a & 1);
      mask ^= std::uint64_t{1} << a;
      const auto& flip = flip_[a];
      if (to_ccw) {
        for (int e = 0; e < n_; ++e) loads[e] += flip[e];
      } else {
        for (int e = 0; e < n_; ++e) loads[e] -= flip[e];
      }
      best.Offer(Objective(loads), mask);
    }
    return best;
  }

  std::int64_t Objective(const std::vector<std::int64_t>& loads) const {
    std::int64_t worst = std::numeric_limits<std::int64_t>::min();
    for (int e = 0; e < n_; ++e) {
      worst = std::max(worst, loads[e] - reference_[e]);
    }
    return worst;
  }

  int n_;
  std::vector<std::int64_t> reference_;
  BruteForceOptions options_;
  std::vector<std::size_t> active_;
  std::vector<std::vector<std::int64_t>> clockwise_;
  std::vector<std::vector<std::int64_t>> flip_;
  std::size_t demand_count_ = 0;
};

std::vector<std::int64_t> Raw(const LoadVector& loads) {
  std::vector<std::int64_t> out;
  out.reserve(loads.size());
  for (Scaled s : loads) out.push_back(s.raw());
  return out;
}

// Fixed-width bitset over the window [lo, hi] of prefix-sum values.
class Window {
 public:
  explicit Window(std::int64_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  bool Test(std::int64_t i) const {
    return i >= 0 && i < width_ && (words_[i >> 6] >> (i & 63) & 1);
  }
  void Set(std::int64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool Any() const {
    return std::any_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w != 0; });
  }

  // this |= other shifted by s (positive moves bits to higher indices).
  void OrShifted(const Window& other, std::int64_t s) {
    const std::int64_t n = static_cast<std::int64_t>(words_.size());
    if (s >= width_ || -s >= width_) return;
    const std::int64_t word = (s >= 0 ? s : -s) >> 6;
    const int bit = static_cast<int>((s >= 0 ? s : -s) & 63);
    for (std::int64_t w = 0; w < n; ++w) {
      std::uint64_t value = 0;
      if (s >= 0) {
        std::int64_t src = w - word;
        if (src >= 0) value = other.words_[src] << bit;
        if (bit != 0 && src - 1 >= 0) value |= other.words_[src - 1] >> (64 - bit);
      } else {
        std::int64_t src = w + word;
        if (src < n) value = other.words_[src] >> bit;
        if (bit != 0 && src + 1 < n) value |= other.words_[src + 1] << (64 - bit);
      }
      words_[w] |= value;
    }
    const int tail = static_cast<int>(width_ & 63);
    if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

 private:
  std::int64_t width_;
  std::vector<std::uint64_t> words_;
};

std::int64_t FloorDiv2(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
std::int64_t CeilDiv2(std::int64_t v) { return -FloorDiv2(-v); }

struct IntegralPairs {
  std::vector<std::int64_t> u, v;
};

IntegralPairs RequireIntegral(const CrossingInstance& cross) {
  if (!cross.is_integral() || !cross.max_demand.is_integral()) {
    throw Error(ErrorCode::kNotIntegral,
                "dynamic program needs whole-number u, v and D");
  }
  IntegralPairs out;
  for (const CrossingPair& p : cross.pairs) {
    out.u.push_back(p.u.ToInt());
    out.v.push_back(p.v.ToInt());
  }
  return out;
}

std::optional<UnsplitRouting> Feasible(const IntegralPairs& pairs,
                                       std::int64_t t, std::int64_t y) {
  const std::size_t m = pairs.u.size();
  if (t < 0 || (y < 0 ? -y : y) > t) return std::nullopt;
  const std::int64_t lo = CeilDiv2(y - t);
  const std::int64_t hi = FloorDiv2(y + t);
  std::vector<Window> reach;
  reach.reserve(m + 1);
  reach.emplace_back(hi - lo + 1);
  reach[0].Set(-lo);
  for (std::size_t k = 0; k < m; ++k) {
    Window next(hi - lo + 1);
    next.OrShifted(reach[k], pairs.v[k]);
    next.OrShifted(reach[k], -pairs.u[k]);
    if (!next.Any()) return std::nullopt;
    reach.push_back(std::move(next));
  }
  if (!reach[m].Test(y - lo)) return std::nullopt;

  UnsplitRouting z;
  z.dirs.resize(m);
  std::int64_t at = y - lo;
  for (std::size_t k = m; k > 0; --k) {
    if (reach[k - 1].Test(at - pairs.v[k - 1])) {
      z.dirs[k - 1] = Direction::kClockwise;
      at -= pairs.v[k - 1];
    } else {
      z.dirs[k - 1] = Direction::kCounterclockwise;
      at += pairs.u[k - 1];
    }
  }
  return z;
}

// Some end point y in [-t, t] admits a solution; parity of y is forced when
// every demand is even.
std::optional<UnsplitRouting> FeasibleAnyEnd(const IntegralPairs& pairs,
                                             std::int64_t t) {
  bool all_even = true;
  std::int64_t sum_u = 0;
  for (std::size_t k = 0; k < pairs.u.size(); ++k) {
    all_even = all_even && (pairs.u[k] + pairs.v[k]) % 2 == 0;
    sum_u += pairs.u[k];
  }
  for (std::int64_t y = -t; y <= t; ++y) {
    if (all_even && ((y - sum_u) % 2 + 2) % 2 != 0) continue;
    if (auto z = Feasible(pairs, t, y)) return z;
  }
  return std::nullopt;
}

}  // namespace

ExactResult BruteForceMinIncrease(const RingInstance& inst,
                                  const SplitRouting& split,
                                  const BruteForceOptions& options) {
  RequireValid(inst, &split);
  return Enumerator(inst, Raw(EdgeLoads(inst, split)), options).Run();
}

ExactResult BruteForceOptimumL(const RingInstance& inst,
                               const BruteForceOptions& options) {
  RequireValid(inst);
  return Enumerator(inst, std::vector<std::int64_t>(inst.n, 0), options).Run();
}

std::optional<UnsplitRouting> DpFeasible(const CrossingInstance& cross,
                                         Scaled t, Scaled y) {
  const IntegralPairs pairs = RequireIntegral(cross);
  if (!y.is_integral() || t < Scaled()) return std::nullopt;
  // Performance is integral, so only floor(t) matters.
  return Feasible(pairs, t.raw() / kScale, y.ToInt());
}

bool DpFeasibleAnyEnd(const CrossingInstance& cross, Scaled t) {
  const IntegralPairs pairs = RequireIntegral(cross);
  if (t < Scaled()) return false;
  return FeasibleAnyEnd(pairs, t.raw() / kScale).has_value();
}

DpResult DpMinIncrease(const CrossingInstance& cross) {
  const IntegralPairs pairs = RequireIntegral(cross);
  std::int64_t lo = 0;
  std::int64_t hi = 3 * cross.max_demand.ToInt() / 2;
  auto best = FeasibleAnyEnd(pairs, hi);
  if (!best) {
    throw Error(ErrorCode::kInternalGuaranteeViolation,
                "no solution within 3D/2");
  }
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (auto z = FeasibleAnyEnd(pairs, mid)) {
      hi = mid;
      best = std::move(z);
    } else {
      lo = mid + 1;
    }
  }
  return DpResult{std::move(*best), Scaled::FromInt(hi)};
}

}  // namespace ringload
