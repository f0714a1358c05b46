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

#ifndef RINGLOAD_SEARCH_HPP_
#define RINGLOAD_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringload/reduction.hpp"

namespace ringload {

// Relabelings of a crossing-form sequence that keep its minimum additive
// performance: rotation of the ring by r nodes (r in 0..2m-1) optionally
// followed by reversal of the demand order.
struct Symmetry {
  std::size_t rotation = 0;
  bool reflect = false;
};

std::vector<CrossingPair> ApplySymmetry(const std::vector<CrossingPair>& pairs,
                                        const Symmetry& g);

// All 4m symmetries, or with `structured` only those mapping every even
// 1-based position onto an even position.
std::vector<Symmetry> SymmetryGroup(std::size_t m, bool structured);

// Lexicographically smallest (v, u) list over the group.
std::vector<CrossingPair> Canonicalize(const std::vector<CrossingPair>& pairs,
                                       bool structured);

struct Shard {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

struct SearchHit {
  std::vector<CrossingPair> pairs;
  Scaled t_star;
};

struct SearchStats {
  std::uint64_t begin = 0;      // raw index range of the shard
  std::uint64_t end = 0;
  std::uint64_t resumed_at = 0;  // first raw index actually processed
  std::uint64_t canonical = 0;   // canonical odd-sum sequences evaluated
};

struct SearchOptions {
  Shard shard;
  // Appends the last processed raw index, one per line; an existing file
  // resumes after its last line.
  std::optional<std::string> checkpoint;
  std::function<void(const SearchHit&)> on_hit;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  SearchStats stats;
};

// Number of raw structured sequences (before parity and symmetry
// filtering). Throws kInfeasibleParams.
std::uint64_t StructuredFamilySize(int m, int max_demand);

// Raw index of a structured sequence, or nullopt if it is not in the family
// enumeration.
std::optional<std::uint64_t> StructuredIndex(
    const std::vector<CrossingPair>& pairs, int max_demand);

// Shard of `count` containing a raw index.
Shard ShardOf(std::uint64_t raw_index, std::uint64_t total,
              std::uint64_t count);

// Every canonical structured sequence of the shard whose minimum additive
// performance is at least `threshold`.
SearchResult SearchLowerBound(int m, int max_demand, const Rational& threshold,
                              const SearchOptions& options = {});

}  // namespace ringload

#endif  // RINGLOAD_SEARCH_HPP_
