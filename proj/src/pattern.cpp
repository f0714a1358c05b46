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

#include "ringload/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace ringload {

Pattern::Pattern(const CrossingInstance& owner, std::vector<Scaled> points)
    : owner_(&owner), points_(std::move(points)) {
  if (points_.size() != owner.m() + 1) {
    throw Error(ErrorCode::kStepMismatch,
                "pattern needs " + std::to_string(owner.m() + 1) +
                    " points, got " + std::to_string(points_.size()));
  }
  for (std::size_t k = 1; k < points_.size(); ++k) {
    Scaled step = points_[k] - points_[k - 1];
    const CrossingPair& pair = owner.pairs[k - 1];
    if (step != pair.v && step != -pair.u) {
      throw Error(ErrorCode::kStepMismatch,
                  "step " + std::to_string(k) + " is " + step.ToString() +
                      ", expected " + pair.v.ToString() + " or -" +
                      pair.u.ToString());
    }
  }
}

Scaled Pattern::low() const {
  return *std::min_element(points_.begin(), points_.end());
}

Scaled Pattern::high() const {
  return *std::max_element(points_.begin(), points_.end());
}

Scaled Performance(const Pattern& p) {
  Scaled x = p.start(), y = p.end();
  return std::max(p.high() * 2 - x - y, x + y - p.low() * 2);
}

namespace {

void RequireGreedyRange(const CrossingInstance& cross, Scaled point,
                        ErrorCode code, const char* what) {
  Scaled lo = Scaled::Fraction(cross.max_demand, 1, 14);
  Scaled hi = Scaled::Fraction(cross.max_demand, 13, 14);
  if (point < lo || point > hi) {
    throw Error(code, std::string(what) + " " + point.ToString() +
                          " outside [" + lo.ToString() + ", " + hi.ToString() +
                          "]");
  }
}

void RequireStrip(const CrossingInstance& cross, Scaled point, ErrorCode code,
                  const char* what) {
  if (point < Scaled() || point > cross.max_demand) {
    throw Error(code, std::string(what) + " " + point.ToString() +
                          " outside [0, " + cross.max_demand.ToString() + "]");
  }
}

// Picks between the +v candidate and the -u candidate: stay in [0, D], then
// nearest to D/2, then +v.
Scaled ChooseNearMiddle(Scaled plus_v, Scaled minus_u, Scaled cap) {
  const Scaled mid = cap.Half();
  const bool plus_ok = Scaled() <= plus_v && plus_v <= cap;
  const bool minus_ok = Scaled() <= minus_u && minus_u <= cap;
  if (plus_ok && minus_ok) {
    return Abs(minus_u - mid) < Abs(plus_v - mid) ? minus_u : plus_v;
  }
  if (plus_ok) return plus_v;
  if (minus_ok) return minus_u;
  throw Error(ErrorCode::kInternalGuaranteeViolation,
              "greedy step left the strip (demand larger than D?)");
}

}  // namespace

Pattern ForwardGreedyOnStrip(const CrossingInstance& cross, Scaled start) {
  RequireStrip(cross, start, ErrorCode::kStartOutOfRange, "start");
  std::vector<Scaled> points{start};
  points.reserve(cross.m() + 1);
  for (const CrossingPair& pair : cross.pairs) {
    Scaled cur = points.back();
    points.push_back(
        ChooseNearMiddle(cur + pair.v, cur - pair.u, cross.max_demand));
  }
  return Pattern(cross, std::move(points));
}

Pattern BackwardGreedyOnStrip(const CrossingInstance& cross, Scaled end) {
  RequireStrip(cross, end, ErrorCode::kEndOutOfRange, "end");
  std::vector<Scaled> points(cross.m() + 1);
  points[cross.m()] = end;
  for (std::size_t k = cross.m(); k > 0; --k) {
    const CrossingPair& pair = cross.pairs[k - 1];
    Scaled cur = points[k];
    points[k - 1] =
        ChooseNearMiddle(cur - pair.v, cur + pair.u, cross.max_demand);
  }
  return Pattern(cross, std::move(points));
}

Pattern ForwardGreedy(const CrossingInstance& cross, Scaled start) {
  RequireGreedyRange(cross, start, ErrorCode::kStartOutOfRange, "start");
  return ForwardGreedyOnStrip(cross, start);
}

Pattern BackwardGreedy(const CrossingInstance& cross, Scaled end) {
  RequireGreedyRange(cross, end, ErrorCode::kEndOutOfRange, "end");
  return BackwardGreedyOnStrip(cross, end);
}

std::optional<ClosenessWitness> FindClose(const Pattern& p1, const Pattern& p2,
                                          Scaled eps) {
  if (&p1.owner() != &p2.owner()) {
    throw Error(ErrorCode::kOwnerMismatch,
                "patterns belong to different instances");
  }
  for (std::size_t k = 0; k <= p1.m(); ++k) {
    Scaled gap = p1[k] - p2[k];
    if (Abs(gap) <= eps) return ClosenessWitness{k, gap};
  }
  return std::nullopt;
}

Pattern Crossover(const Pattern& p1, const Pattern& p2,
                  const ClosenessWitness& w) {
  if (&p1.owner() != &p2.owner()) {
    throw Error(ErrorCode::kOwnerMismatch,
                "patterns belong to different instances");
  }
  if (w.k > p1.m() || p1[w.k] - p2[w.k] != w.eps_prime) {
    throw Error(ErrorCode::kInvalidWitness,
                "witness does not match the patterns at k = " +
                    std::to_string(w.k));
  }
  if (w.eps_prime.raw() % 2 != 0) {
    throw Error(ErrorCode::kOddEpsilon,
                "eps' = " + w.eps_prime.ToString() + " has no exact half");
  }
  const Scaled shift = w.eps_prime.Half();
  std::vector<Scaled> points(p1.m() + 1);
  for (std::size_t i = 0; i <= p1.m(); ++i) {
    points[i] = i <= w.k ? p1[i] - shift : p2[i] + shift;
  }
  return Pattern(p1.owner(), std::move(points));
}

UnsplitRouting SolutionFromPattern(const Pattern& p) {
  UnsplitRouting z;
  z.dirs.reserve(p.m());
  for (std::size_t k = 1; k <= p.m(); ++k) {
    Scaled step = p[k] - p[k - 1];
    // +v and -u never coincide because both are positive.
    z.dirs.push_back(step == p.owner().pairs[k - 1].v
                         ? Direction::kClockwise
                         : Direction::kCounterclockwise);
  }
  return z;
}

Pattern PatternFromSolution(const CrossingInstance& cross,
                            const UnsplitRouting& z, Scaled start) {
  if (z.dirs.size() != cross.m()) {
    throw Error(ErrorCode::kLengthMismatch,
                "z has " + std::to_string(z.dirs.size()) + " entries, m = " +
                    std::to_string(cross.m()));
  }
  std::vector<Scaled> points{start};
  for (std::size_t k = 0; k < cross.m(); ++k) {
    const CrossingPair& pair = cross.pairs[k];
    points.push_back(points.back() + (z.dirs[k] == Direction::kClockwise
                                          ? pair.v
                                          : -pair.u));
  }
  return Pattern(cross, std::move(points));
}

std::string DumpTable(const Pattern& p) {
  std::ostringstream out;
  for (std::size_t k = 0; k <= p.m(); ++k) {
    out << k << ' ' << p[k].ToString() << '\n';
  }
  return out.str();
}

}  // namespace ringload
