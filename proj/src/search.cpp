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

#include "ringload/search.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ringload/exact.hpp"

namespace ringload {

namespace {

struct Option {
  int u;
  int v;
};

// Options of one position, ordered by (v, u).
std::vector<Option> FreeOptions(int max_demand) {
  std::vector<Option> out;
  for (int v = 1; v < max_demand; ++v) {
    for (int u = 1; u + v <= max_demand; ++u) {
      if ((u + v) % 2 == 0) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<Option> PinnedOptions(int max_demand) {
  std::vector<Option> out;
  for (int v = 1; v < max_demand; ++v) out.push_back({max_demand - v, v});
  return out;
}

bool Pinned(std::size_t position) { return position % 2 == 1; }

void RequireFamily(int m, int max_demand) {
  if (m < 1 || max_demand < 2 || max_demand % 2 != 0) {
    throw Error(ErrorCode::kInfeasibleParams,
                "structured family needs m >= 1 and an even D >= 2");
  }
}

// Per symmetry, the source position and swap flag of every output position.
struct Permutation {
  std::vector<std::size_t> source;
  std::vector<bool> swap;
};

Permutation PermutationOf(std::size_t m, const Symmetry& g) {
  Permutation p;
  p.source.resize(m);
  p.swap.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = g.reflect ? m - 1 - i : i;
    std::size_t shifted = j + g.rotation % (2 * m);
    p.source[i] = shifted % m;
    p.swap[i] = (shifted / m) % 2 == 1;
  }
  return p;
}

bool LexLess(const std::vector<CrossingPair>& a,
             const std::vector<CrossingPair>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v != b[i].v) return a[i].v < b[i].v;
    if (a[i].u != b[i].u) return a[i].u < b[i].u;
  }
  return false;
}

std::int64_t CeilRational(const Rational& r) {
  std::int64_t q = r.num() / r.den();
  if (r.num() % r.den() != 0 && r.num() > 0) ++q;
  return q;
}

std::int64_t FloorHalf(std::int64_t v) { return v >= 0 ? v / 2 : -((1 - v) / 2); }

// Bitmask version of the pattern DP for windows of at most 64 values.
bool SmallWindowFeasible(const int* u, const int* v, std::size_t m, int t,
                         int sum_u) {
  for (int y = -t; y <= t; ++y) {
    if (((y - sum_u) % 2 + 2) % 2 != 0) continue;
    const std::int64_t lo = -FloorHalf(t - y);  // ceil((y - t) / 2)
    const std::int64_t hi = FloorHalf(y + t);
    const int width = static_cast<int>(hi - lo + 1);
    const std::uint64_t full =
        width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    std::uint64_t reach = std::uint64_t{1} << (-lo);
    for (std::size_t k = 0; k < m && reach != 0; ++k) {
      std::uint64_t up = v[k] < 64 ? reach << v[k] : 0;
      std::uint64_t down = u[k] < 64 ? reach >> u[k] : 0;
      reach = (up | down) & full;
    }
    if (reach >> (y - lo) & 1) return true;
  }
  return false;
}

std::optional<std::uint64_t> ReadCheckpoint(const std::string& path) {
  std::ifstream in(path);
  std::optional<std::uint64_t> last;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream parse(line);
    std::uint64_t value = 0;
    if (!(parse >> value)) {
      throw Error(ErrorCode::kSyntaxError,
                  "bad checkpoint line in " + path + ": " + line);
    }
    last = value;
  }
  return last;
}

}  // namespace

std::vector<CrossingPair> ApplySymmetry(const std::vector<CrossingPair>& pairs,
                                        const Symmetry& g) {
  const std::size_t m = pairs.size();
  if (m == 0) return {};
  const Permutation p = PermutationOf(m, g);
  std::vector<CrossingPair> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const CrossingPair& src = pairs[p.source[i]];
    out[i] = p.swap[i] ? CrossingPair{src.v, src.u} : src;
  }
  return out;
}

std::vector<Symmetry> SymmetryGroup(std::size_t m, bool structured) {
  std::vector<Symmetry> group;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < 2 * m; ++r) {
      Symmetry g{r, reflect == 1};
      if (structured) {
        const Permutation p = PermutationOf(m, g);
        bool keeps = true;
        for (std::size_t i = 0; i < m; ++i) {
          keeps = keeps && Pinned(i) == Pinned(p.source[i]);
        }
        if (!keeps) continue;
      }
      group.push_back(g);
    }
  }
  return group;
}

std::vector<CrossingPair> Canonicalize(const std::vector<CrossingPair>& pairs,
                                       bool structured) {
  std::vector<CrossingPair> best = pairs;
  for (const Symmetry& g : SymmetryGroup(pairs.size(), structured)) {
    std::vector<CrossingPair> image = ApplySymmetry(pairs, g);
    if (LexLess(image, best)) best = std::move(image);
  }
  return best;
}

std::uint64_t StructuredFamilySize(int m, int max_demand) {
  RequireFamily(m, max_demand);
  const unsigned __int128 limit = ~std::uint64_t{0};
  const std::uint64_t free_count = FreeOptions(max_demand).size();
  const std::uint64_t pinned_count = PinnedOptions(max_demand).size();
  unsigned __int128 total = 1;
  for (int k = 0; k < m; ++k) {
    total *= Pinned(k) ? pinned_count : free_count;
    if (total > limit) {
      throw Error(ErrorCode::kInfeasibleParams,
                  "structured family too large to index");
    }
  }
  return static_cast<std::uint64_t>(total);
}

std::optional<std::uint64_t> StructuredIndex(
    const std::vector<CrossingPair>& pairs, int max_demand) {
  const int m = static_cast<int>(pairs.size());
  StructuredFamilySize(m, max_demand);
  const std::vector<Option> free_options = FreeOptions(max_demand);
  const std::vector<Option> pinned_options = PinnedOptions(max_demand);
  std::uint64_t index = 0;
  for (int k = 0; k < m; ++k) {
    const auto& options = Pinned(k) ? pinned_options : free_options;
    if (!pairs[k].u.is_integral() || !pairs[k].v.is_integral()) {
      return std::nullopt;
    }
    const int u = static_cast<int>(pairs[k].u.ToInt());
    const int v = static_cast<int>(pairs[k].v.ToInt());
    auto it = std::find_if(options.begin(), options.end(), [&](Option o) {
      return o.u == u && o.v == v;
    });
    if (it == options.end()) return std::nullopt;
    index = index * options.size() + (it - options.begin());
  }
  return index;
}

Shard ShardOf(std::uint64_t raw_index, std::uint64_t total,
              std::uint64_t count) {
  // Shard i covers [total*i/count, total*(i+1)/count).
  std::uint64_t i = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(raw_index) * count) / total);
  auto begin = [&](std::uint64_t s) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) *
                                      s / count);
  };
  while (i > 0 && begin(i) > raw_index) --i;
  while (i + 1 < count && begin(i + 1) <= raw_index) ++i;
  return Shard{i, count};
}

SearchResult SearchLowerBound(int m, int max_demand, const Rational& threshold,
                              const SearchOptions& options) {
  const std::uint64_t total = StructuredFamilySize(m, max_demand);
  const Shard shard = options.shard;
  if (shard.count == 0 || shard.index >= shard.count) {
    throw Error(ErrorCode::kInfeasibleParams,
                "shard index must lie in [0, count)");
  }
  SearchResult result;
  SearchStats& stats = result.stats;
  stats.begin = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(total) * shard.index / shard.count);
  stats.end = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(total) * (shard.index + 1) / shard.count);
  stats.resumed_at = stats.begin;
  if (options.checkpoint) {
    if (auto last = ReadCheckpoint(*options.checkpoint)) {
      stats.resumed_at = std::max(stats.begin, *last + 1);
    }
  }
  if (stats.resumed_at >= stats.end) return result;

  const std::vector<Option> free_options = FreeOptions(max_demand);
  const std::vector<Option> pinned_options = PinnedOptions(max_demand);
  const std::size_t sm = static_cast<std::size_t>(m);
  std::vector<const std::vector<Option>*> radix(sm);
  for (std::size_t k = 0; k < sm; ++k) {
    radix[k] = Pinned(k) ? &pinned_options : &free_options;
  }
  std::vector<Permutation> group;
  for (const Symmetry& g : SymmetryGroup(sm, true)) {
    if (g.rotation == 0 && !g.reflect) continue;
    group.push_back(PermutationOf(sm, g));
  }

  // Performance is integral here, so t* >= threshold iff infeasible at
  // ceil(threshold) - 1.
  const std::int64_t probe = CeilRational(threshold) - 1;
  const Scaled d_max = Scaled::FromInt(max_demand);

  std::vector<std::size_t> digit(sm);
  {
    std::uint64_t rest = stats.resumed_at;
    for (std::size_t k = sm; k-- > 0;) {
      digit[k] = rest % radix[k]->size();
      rest /= radix[k]->size();
    }
  }
  std::vector<int> u(sm), v(sm);
  for (std::size_t k = 0; k < sm; ++k) {
    u[k] = (*radix[k])[digit[k]].u;
    v[k] = (*radix[k])[digit[k]].v;
  }

  std::ofstream checkpoint;
  if (options.checkpoint) checkpoint.open(*options.checkpoint, std::ios::app);
  constexpr std::uint64_t kCheckpointEvery = std::uint64_t{1} << 22;

  for (std::uint64_t raw = stats.resumed_at; raw < stats.end; ++raw) {
    int sum_u = 0;
    for (std::size_t k = 0; k < sm; ++k) sum_u += u[k];
    bool candidate = sum_u % 2 == 1;
    for (std::size_t g = 0; candidate && g < group.size(); ++g) {
      const Permutation& p = group[g];
      for (std::size_t i = 0; i < sm; ++i) {
        const std::size_t s = p.source[i];
        const int tv = p.swap[i] ? u[s] : v[s];
        const int tu = p.swap[i] ? v[s] : u[s];
        if (tv != v[i]) {
          candidate = tv > v[i];
          break;
        }
        if (tu != u[i]) {
          candidate = tu > u[i];
          break;
        }
      }
    }
    if (candidate) {
      ++stats.canonical;
      bool hit;
      if (probe < 0) {
        hit = true;
      } else if (probe < 64) {
        hit = !SmallWindowFeasible(u.data(), v.data(), sm,
                                   static_cast<int>(probe), sum_u);
      } else {
        std::vector<CrossingPair> pairs;
        for (std::size_t k = 0; k < sm; ++k) {
          pairs.push_back({Scaled::FromInt(u[k]), Scaled::FromInt(v[k])});
        }
        hit = !DpFeasibleAnyEnd(
            CrossingInstance::Standalone(std::move(pairs), d_max),
            Scaled::FromInt(probe));
      }
      if (hit) {
        SearchHit found;
        for (std::size_t k = 0; k < sm; ++k) {
          found.pairs.push_back({Scaled::FromInt(u[k]), Scaled::FromInt(v[k])});
        }
        found.t_star =
            DpMinIncrease(CrossingInstance::Standalone(found.pairs, d_max))
                .t_star;
        if (options.on_hit) options.on_hit(found);
        result.hits.push_back(std::move(found));
      }
    }
    if (checkpoint.is_open() &&
        ((raw + 1 - stats.resumed_at) % kCheckpointEvery == 0 ||
         raw + 1 == stats.end)) {
      checkpoint << raw << '\n' << std::flush;
    }
    // Odometer step, last position fastest.
    for (std::size_t k = sm; k-- > 0;) {
      if (++digit[k] < radix[k]->size()) {
        u[k] = (*radix[k])[digit[k]].u;
        v[k] = (*radix[k])[digit[k]].v;
        break;
      }
      digit[k] = 0;
      u[k] = (*radix[k])[0].u;
      v[k] = (*radix[k])[0].v;
    }
  }
  return result;
}

}  // namespace ringload
