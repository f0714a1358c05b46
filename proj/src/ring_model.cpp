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

#include "ringload/ring_model.hpp"

#include <algorithm>

namespace ringload {

Scaled RingInstance::max_demand() const {
  Scaled best;
  for (const Demand& dem : demands) best = std::max(best, dem.d);
  return best;
}

std::optional<Violation> ValidateInstance(const RingInstance& inst,
                                          const SplitRouting* split) {
  if (inst.n < 2) {
    return Violation{ErrorCode::kInvalidRingSize,
                     "ring needs at least 2 nodes, got " +
                         std::to_string(inst.n)};
  }
  for (std::size_t t = 0; t < inst.demands.size(); ++t) {
    const Demand& dem = inst.demands[t];
    if (dem.i < 1 || dem.j > inst.n || dem.i >= dem.j) {
      return Violation{ErrorCode::kNodeOutOfRange,
                       "demand " + std::to_string(t) + " (" +
                           std::to_string(dem.i) + "," +
                           std::to_string(dem.j) +
                           ") needs 1 <= i < j <= " + std::to_string(inst.n)};
    }
    if (dem.d < Scaled()) {
      return Violation{ErrorCode::kNegativeDemand,
                       "demand " + std::to_string(t) + " has value " +
                           dem.d.ToString()};
    }
  }
  if (split == nullptr) return std::nullopt;
  if (split->cw.size() != inst.demands.size()) {
    return Violation{ErrorCode::kIndexMismatch,
                     "split has " + std::to_string(split->cw.size()) +
                         " entries for " +
                         std::to_string(inst.demands.size()) + " demands"};
  }
  for (std::size_t t = 0; t < inst.demands.size(); ++t) {
    Scaled cw = split->cw[t];
    if (cw < Scaled() || cw > inst.demands[t].d) {
      return Violation{ErrorCode::kSplitExceedsDemand,
                       "demand " + std::to_string(t) + ": cw " +
                           cw.ToString() + " outside [0, " +
                           inst.demands[t].d.ToString() + "]"};
    }
  }
  return std::nullopt;
}

void RequireValid(const RingInstance& inst, const SplitRouting* split) {
  if (auto violation = ValidateInstance(inst, split)) {
    throw Error(violation->code, violation->message);
  }
}

namespace {

// Difference-array accumulation: clockwise flow covers edges i..j-1, the
// counterclockwise flow covers edges j..n and 1..i-1.
class LoadAccumulator {
 public:
  explicit LoadAccumulator(int n) : delta_(n + 1) {}

  void Add(const Demand& dem, Scaled cw, Scaled ccw) {
    delta_[dem.i - 1] += cw - ccw;
    delta_[dem.j - 1] -= cw - ccw;
    base_ += ccw;
  }

  LoadVector Finish() const {
    int n = static_cast<int>(delta_.size()) - 1;
    LoadVector loads(n);
    Scaled running = base_;
    for (int k = 0; k < n; ++k) {
      running += delta_[k];
      loads[k] = running;
    }
    return loads;
  }

 private:
  std::vector<Scaled> delta_;
  Scaled base_;
};

}  // namespace

LoadVector EdgeLoads(const RingInstance& inst, const SplitRouting& split) {
  LoadAccumulator acc(inst.n);
  for (std::size_t t = 0; t < inst.demands.size(); ++t) {
    const Demand& dem = inst.demands[t];
    acc.Add(dem, split.cw[t], dem.d - split.cw[t]);
  }
  return acc.Finish();
}

LoadVector EdgeLoads(const RingInstance& inst, const UnsplitRouting& routing) {
  return EdgeLoads(inst, AsSplit(inst, routing));
}

Scaled MaxLoad(const LoadVector& loads) {
  if (loads.empty()) return Scaled();
  return *std::max_element(loads.begin(), loads.end());
}

Scaled AdditiveIncrease(const RingInstance& inst, const SplitRouting& split,
                        const UnsplitRouting& unsplit) {
  LoadVector before = EdgeLoads(inst, split);
  LoadVector after = EdgeLoads(inst, unsplit);
  Scaled best = after[0] - before[0];
  for (std::size_t k = 1; k < before.size(); ++k) {
    best = std::max(best, after[k] - before[k]);
  }
  return best;
}

std::optional<UnsplitRouting> AsUnsplit(const RingInstance& inst,
                                        const SplitRouting& split) {
  UnsplitRouting out;
  out.dirs.reserve(inst.demands.size());
  for (std::size_t t = 0; t < inst.demands.size(); ++t) {
    if (split.cw[t] == inst.demands[t].d) {
      out.dirs.push_back(Direction::kClockwise);
    } else if (split.cw[t] == Scaled()) {
      out.dirs.push_back(Direction::kCounterclockwise);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

SplitRouting AsSplit(const RingInstance& inst, const UnsplitRouting& routing) {
  if (routing.dirs.size() != inst.demands.size()) {
    throw Error(ErrorCode::kIndexMismatch,
                "routing has " + std::to_string(routing.dirs.size()) +
                    " directions for " + std::to_string(inst.demands.size()) +
                    " demands");
  }
  SplitRouting split;
  split.cw.reserve(inst.demands.size());
  for (std::size_t t = 0; t < inst.demands.size(); ++t) {
    split.cw.push_back(routing.dirs[t] == Direction::kClockwise
                           ? inst.demands[t].d
                           : Scaled());
  }
  return split;
}

}  // namespace ringload
