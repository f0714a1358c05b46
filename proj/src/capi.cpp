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

#include "ringload/ringload.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"
#include "json_util.hpp"
#include "ringload/approx.hpp"
#include "ringload/exact.hpp"
#include "ringload/instance_io.hpp"
#include "ringload/instances.hpp"
#include "ringload/search.hpp"
#include "ringload/verify.hpp"

struct rl_instance {
  ringload::InstanceDocument doc;
};

namespace {

using nlohmann::json;
using namespace ringload;

thread_local std::string last_error;

rl_status Fail(rl_status status, const std::string& message) {
  last_error = std::string(rl_status_name(status)) + ": " + message;
  return status;
}

template <typename Fn>
rl_status Guard(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const Error& e) {
    last_error = e.what();  // already carries the code name
    return static_cast<rl_status>(static_cast<int>(e.code()) + 1);
  } catch (const std::bad_alloc&) {
    return Fail(RL_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return Fail(RL_INTERNAL_ERROR, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rl_status Emit(const json& doc, char** out) {
  *out = Dup(doc.dump(2) + "\n");
  return RL_OK;
}

BruteForceOptions Brute(const rl_options* options) {
  BruteForceOptions out;
  if (options != nullptr) {
    out.cap = options->brute_cap;
    out.workers = options->workers == 0 ? 1 : options->workers;
  }
  return out;
}

const SplitRouting& RequireSplit(const rl_instance* inst) {
  if (!inst->doc.split) {
    throw Error(ErrorCode::kSchemaError,
                "this command needs a split routing (\"cw\" on every demand)");
  }
  return *inst->doc.split;
}

json PairsJson(const std::vector<CrossingPair>& pairs) {
  json out = json::array();
  for (const CrossingPair& p : pairs) {
    out.push_back({p.v.ToString(), p.u.ToString()});
  }
  return out;
}

json IntPairsJson(const std::vector<CrossingPair>& pairs) {
  json out = json::array();
  for (const CrossingPair& p : pairs) out.push_back({p.v.ToInt(), p.u.ToInt()});
  return out;
}

// Routing section for the original instance plus summary fields.
void AddRouting(json& report, const RingInstance& inst,
                const SplitRouting& split, const UnsplitRouting& routing) {
  const Scaled increase = AdditiveIncrease(inst, split, routing);
  const LoadVector loads = EdgeLoads(inst, routing);
  report["routing"] = detail::RoutingJson(routing, increase, loads);
  report["split_max_load"] = MaxLoad(EdgeLoads(inst, split)).ToString();
  report["unsplit_max_load"] = MaxLoad(loads).ToString();
  report["max_increase"] = increase.ToString();
}

json SolveJson(const rl_instance* inst, const std::string& alg,
               long medium_demand, const rl_options* options) {
  const RingInstance& ring = inst->doc.instance;
  const SplitRouting& split = RequireSplit(inst);
  json report;
  report["algorithm"] = alg;

  if (alg == "brute") {
    const ExactResult r = BruteForceMinIncrease(ring, split, Brute(options));
    report["performance"] = r.value.ToString();
    AddRouting(report, ring, split, r.routing);
    return report;
  }

  const Reduction red = ReduceToCrossing(ring, split);
  const CrossingInstance& cross = red.crossing;
  report["D"] = cross.max_demand.ToString();
  report["m"] = cross.m();
  report["fixed_demands"] = cross.fixed.size();
  report["crossing_pairs"] = PairsJson(cross.pairs);

  UnsplitRouting z;
  if (alg == "dp") {
    const DpResult r = DpMinIncrease(cross);
    z = r.z;
    report["performance"] = r.t_star.ToString();
  } else {
    SolveReport r;
    if (alg == "ssw") {
      r = SswThreeHalves(cross);
    } else if (alg == "medium") {
      std::optional<MediumChoice> choice;
      if (medium_demand >= 0) {
        const auto i = static_cast<std::size_t>(medium_demand);
        if (i >= cross.m()) {
          throw Error(ErrorCode::kNotMedium,
                      "demand " + std::to_string(i) + " out of range");
        }
        const Scaled d = cross.pairs[i].d();
        choice = MediumChoice{
            i, std::min(d, cross.max_demand - d).ToRational() /
                   cross.max_demand.ToRational()};
      } else {
        choice = PickMediumDemand(cross, false);
      }
      if (!choice) throw Error(ErrorCode::kNotMedium, "instance has no demands");
      r = MediumDemandSolve(cross, choice->index, choice->delta);
      report["medium_demand"] = choice->index;
      report["delta"] = choice->delta.ToString();
    } else if (alg == "smallbig") {
      r = SmallBigSolve(cross);
    } else {
      r = Solve1914(cross);
      report["guarantee"] = "19/14*D";
    }
    z = r.z;
    report["branch"] = BranchName(r.branch);
    report["performance"] = r.perf.ToString();
    report["bound"] = r.bound.ToString();
    if (cross.max_demand > Scaled()) {
      report["bound_over_D"] =
          (r.bound / cross.max_demand.ToRational()).ToString();
    }
    report["points"] = detail::RationalStrings(r.points);
  }
  report["z"] = detail::DirectionStrings(z);
  AddRouting(report, ring, split, LiftSolution(cross, z));
  return report;
}

json HitJson(const SearchHit& hit) {
  return json{{"pairs", IntPairsJson(hit.pairs)},
              {"t_star", hit.t_star.ToString()}};
}

json VerifyJson(const VerifyReport& r) {
  json out;
  out["instance"] = r.instance;
  for (const auto& [key, value] : r.values) out[key] = value;
  json checks = json::array();
  for (const VerifyCheck& c : r.checks) {
    checks.push_back({{"check", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  }
  out["checks"] = std::move(checks);
  out["passes"] = r.passes();
  return out;
}

#define RL_REQUIRE(cond)                                              \
  do {                                                                \
    if (!(cond)) return Fail(RL_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* rl_version(void) { return "1.0.0"; }

const char* rl_status_name(rl_status status) {
  switch (status) {
    case RL_OK: return "Ok";
    case RL_INVALID_ARGUMENT: return "InvalidArgument";
    case RL_IO_ERROR: return "IoError";
    case RL_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (status > RL_OK && status < RL_INVALID_ARGUMENT) {
    return ErrorCodeName(static_cast<ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

const char* rl_last_error(void) { return last_error.c_str(); }

void rl_string_free(char* s) { std::free(s); }

rl_options rl_options_default(void) {
  return rl_options{kDefaultBruteForceCap, 1};
}

rl_status rl_instance_parse(const char* text, rl_instance** out) {
  RL_REQUIRE(text != nullptr && out != nullptr);
  return Guard([&] {
    *out = new rl_instance{ParseInstance(text)};
    return RL_OK;
  });
}

rl_status rl_instance_builtin(const char* name, rl_instance** out) {
  RL_REQUIRE(name != nullptr && out != nullptr);
  return Guard([&] {
    LabeledInstance li = Builtin(name);
    *out = new rl_instance{{std::move(li.instance), std::move(li.split)}};
    return RL_OK;
  });
}

void rl_instance_free(rl_instance* inst) { delete inst; }

int rl_instance_has_split(const rl_instance* inst) {
  return inst != nullptr && inst->doc.split.has_value();
}

rl_status rl_instance_to_json(const rl_instance* inst, char** out) {
  RL_REQUIRE(inst != nullptr && out != nullptr);
  return Guard([&] {
    const SplitRouting* split = inst->doc.split ? &*inst->doc.split : nullptr;
    *out = Dup(WriteInstance(inst->doc.instance, split));
    return RL_OK;
  });
}

rl_status rl_loads(const rl_instance* inst, char** report) {
  RL_REQUIRE(inst != nullptr && report != nullptr);
  return Guard([&] {
    const RingInstance& ring = inst->doc.instance;
    const LoadVector loads = EdgeLoads(ring, RequireSplit(inst));
    const Scaled top = MaxLoad(loads);
    json doc;
    doc["n"] = ring.n;
    doc["D"] = ring.max_demand().ToString();
    doc["loads"] = detail::RationalStrings(loads);
    doc["max_load"] = top.ToString();
    json at = json::array();
    for (std::size_t e = 0; e < loads.size(); ++e) {
      if (loads[e] == top) at.push_back(e + 1);
    }
    doc["max_edges"] = std::move(at);
    const auto cert = CertifySplitOptimal(ring, RequireSplit(inst));
    doc["certified_optimum"] = cert ? json(cert->ToString()) : json(nullptr);
    return Emit(doc, report);
  });
}

rl_status rl_solve(const rl_instance* inst, const char* alg,
                   long medium_demand, const rl_options* options,
                   char** report) {
  RL_REQUIRE(inst != nullptr && alg != nullptr && report != nullptr);
  const std::string name = alg;
  if (name != "ssw" && name != "medium" && name != "smallbig" &&
      name != "auto" && name != "dp" && name != "brute") {
    return Fail(RL_INVALID_ARGUMENT, "unknown algorithm '" + name + "'");
  }
  return Guard([&] {
    return Emit(SolveJson(inst, name, medium_demand, options), report);
  });
}

rl_status rl_optimum(const rl_instance* inst, const rl_options* options,
                     char** report) {
  RL_REQUIRE(inst != nullptr && report != nullptr);
  return Guard([&] {
    const RingInstance& ring = inst->doc.instance;
    const ExactResult r = BruteForceOptimumL(ring, Brute(options));
    json doc;
    doc["L"] = r.value.ToString();
    doc["dirs"] = detail::DirectionStrings(r.routing);
    doc["loads"] = detail::RationalStrings(EdgeLoads(ring, r.routing));
    if (inst->doc.split) {
      const auto cert = CertifySplitOptimal(ring, *inst->doc.split);
      doc["certified_split_optimum"] =
          cert ? json(cert->ToString()) : json(nullptr);
      if (cert) doc["L_minus_L_star"] = (r.value - *cert).ToString();
    }
    return Emit(doc, report);
  });
}

rl_status rl_extend(const rl_instance* inst, rl_instance** out,
                    char** report) {
  RL_REQUIRE(inst != nullptr && out != nullptr && report != nullptr);
  return Guard([&] {
    const Extension ext =
        EqualizeExtension(inst->doc.instance, RequireSplit(inst));
    json doc;
    doc["level"] = ext.level.ToString();
    doc["added"] = ext.added;
    doc["max_added"] = ext.max_added.ToString();
    doc["within_D"] = ext.within_max_demand;
    const auto cert = CertifySplitOptimal(ext.instance, ext.split);
    doc["certified_split_optimum"] =
        cert ? json(cert->ToString()) : json(nullptr);
    doc["instance"] = json::parse(WriteInstance(ext.instance, &ext.split));
    *out = new rl_instance{{ext.instance, ext.split}};
    return Emit(doc, report);
  });
}

rl_status rl_verify(const char* name, const rl_options* options,
                    char** report, int* passes) {
  RL_REQUIRE(name != nullptr && report != nullptr && passes != nullptr);
  return Guard([&] {
    const std::string which = name;
    if (which == "all") {
      json doc;
      doc["instances"] = json::array();
      bool all = true;
      for (const std::string& n : BuiltinNames()) {
        const VerifyReport r = VerifyBuiltin(n, Brute(options));
        all = all && r.passes();
        doc["instances"].push_back(VerifyJson(r));
      }
      doc["passes"] = all;
      *passes = all ? 1 : 0;
      return Emit(doc, report);
    }
    const VerifyReport r = VerifyBuiltin(which, Brute(options));
    *passes = r.passes() ? 1 : 0;
    return Emit(VerifyJson(r), report);
  });
}

rl_status rl_generate(int m, int max_demand, uint64_t seed, int structured,
                      rl_instance** out) {
  RL_REQUIRE(out != nullptr);
  return Guard([&] {
    auto [ring, split] =
        ToRing(RandomCrossing(m, max_demand, seed, structured != 0));
    *out = new rl_instance{{std::move(ring), std::move(split)}};
    return RL_OK;
  });
}

rl_status rl_search(int m, int max_demand, const char* threshold,
                    uint64_t shard_index, uint64_t shard_count,
                    const char* checkpoint, rl_hit_callback on_hit,
                    void* user, char** report) {
  RL_REQUIRE(threshold != nullptr && report != nullptr);
  return Guard([&] {
    const Rational t = Rational::Parse(threshold);
    SearchOptions options;
    options.shard = Shard{shard_index, shard_count};
    if (checkpoint != nullptr) options.checkpoint = checkpoint;
    if (on_hit != nullptr) {
      options.on_hit = [&](const SearchHit& hit) {
        on_hit(HitJson(hit).dump().c_str(), user);
      };
    }
    const SearchResult r = SearchLowerBound(m, max_demand, t, options);
    json doc;
    doc["m"] = m;
    doc["D"] = max_demand;
    doc["threshold"] = t.ToString();
    doc["shard"] = {{"index", shard_index}, {"count", shard_count}};
    doc["raw_range"] = {r.stats.begin, r.stats.end};
    doc["resumed_at"] = r.stats.resumed_at;
    doc["canonical_evaluated"] = r.stats.canonical;
    doc["hits"] = json::array();
    for (const SearchHit& hit : r.hits) doc["hits"].push_back(HitJson(hit));
    return Emit(doc, report);
  });
}

rl_status rl_search_shard_of(const rl_instance* inst, uint64_t count,
                             uint64_t* index) {
  RL_REQUIRE(inst != nullptr && index != nullptr);
  if (count == 0) return Fail(RL_INVALID_ARGUMENT, "shard count must be > 0");
  return Guard([&] {
    const Reduction red = ReduceToCrossing(inst->doc.instance,
                                           RequireSplit(inst));
    const CrossingInstance& cross = red.crossing;
    if (!cross.max_demand.is_integral()) {
      throw Error(ErrorCode::kInfeasibleParams, "D must be whole");
    }
    const int big_d = static_cast<int>(cross.max_demand.ToInt());
    const int m = static_cast<int>(cross.m());
    const auto canonical = Canonicalize(cross.pairs, true);
    const auto raw = StructuredIndex(canonical, big_d);
    if (!IsStructured(cross.pairs, cross.max_demand) || !raw) {
      throw Error(ErrorCode::kInfeasibleParams,
                  "instance is not in the structured family");
    }
    *index = ShardOf(*raw, StructuredFamilySize(m, big_d), count).index;
    return RL_OK;
  });
}

}  // extern "C"
