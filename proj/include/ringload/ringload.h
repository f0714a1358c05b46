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

/* C interface to the ringload library. Every call returns an rl_status;
 * on failure rl_last_error() describes the problem for the calling thread.
 * Strings handed out through char** parameters are owned by the caller and
 * released with rl_string_free. Reports are JSON documents with exact
 * rational strings. */

#ifndef RINGLOAD_RINGLOAD_H_
#define RINGLOAD_RINGLOAD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RL_API __declspec(dllexport)
#else
#define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_NODE_OUT_OF_RANGE,
  RL_NEGATIVE_DEMAND,
  RL_SPLIT_EXCEEDS_DEMAND,
  RL_INDEX_MISMATCH,
  RL_INVALID_RING_SIZE,
  RL_SYNTAX_ERROR,
  RL_SCHEMA_ERROR,
  RL_NOT_PARALLEL,
  RL_LENGTH_MISMATCH,
  RL_START_OUT_OF_RANGE,
  RL_END_OUT_OF_RANGE,
  RL_OWNER_MISMATCH,
  RL_ODD_EPSILON,
  RL_INVALID_WITNESS,
  RL_STEP_MISMATCH,
  RL_NOT_MEDIUM,
  RL_MEDIUM_DEMAND_PRESENT,
  RL_INTERNAL_GUARANTEE_VIOLATION,
  RL_TOO_MANY_DEMANDS,
  RL_NOT_INTEGRAL,
  RL_UNKNOWN_NAME,
  RL_INFEASIBLE_PARAMS,
  RL_NON_REPRESENTABLE,
  RL_INVALID_ARGUMENT, /* null pointer, unknown algorithm name, ... */
  RL_IO_ERROR,
  RL_INTERNAL_ERROR
} rl_status;

typedef struct rl_instance rl_instance; /* instance plus optional split */

typedef struct rl_options {
  size_t brute_cap;  /* max nonzero demands for enumeration */
  unsigned workers;  /* enumeration threads */
} rl_options;

/* Called once per search hit with a one-line JSON record. */
typedef void (*rl_hit_callback)(const char* record, void* user);

RL_API const char* rl_version(void);
RL_API const char* rl_status_name(rl_status status);
RL_API const char* rl_last_error(void);
RL_API void rl_string_free(char* s);
RL_API rl_options rl_options_default(void);

RL_API rl_status rl_instance_parse(const char* json, rl_instance** out);
RL_API rl_status rl_instance_builtin(const char* name, rl_instance** out);
RL_API void rl_instance_free(rl_instance* inst);
RL_API rl_status rl_instance_to_json(const rl_instance* inst, char** out);
RL_API int rl_instance_has_split(const rl_instance* inst);

/* Edge loads of the split routing. */
RL_API rl_status rl_loads(const rl_instance* inst, char** report);

/* alg: ssw, medium, smallbig, auto, dp or brute. medium_demand selects
 * the demand of the reduced instance for "medium" (negative: best one). */
RL_API rl_status rl_solve(const rl_instance* inst, const char* alg,
                          long medium_demand, const rl_options* options,
                          char** report);

/* Optimum unsplittable load by enumeration. */
RL_API rl_status rl_optimum(const rl_instance* inst,
                            const rl_options* options, char** report);

/* Equalizing extension; *out receives the extended instance. */
RL_API rl_status rl_extend(const rl_instance* inst, rl_instance** out,
                           char** report);

/* name: a builtin or "all". *passes is set to 1 iff every check passed. */
RL_API rl_status rl_verify(const char* name, const rl_options* options,
                           char** report, int* passes);

RL_API rl_status rl_generate(int m, int max_demand, uint64_t seed,
                             int structured, rl_instance** out);

/* Lower-bound search over shard index/count. threshold is "p" or "p/q";
 * checkpoint may be NULL. */
RL_API rl_status rl_search(int m, int max_demand, const char* threshold,
                           uint64_t shard_index, uint64_t shard_count,
                           const char* checkpoint, rl_hit_callback on_hit,
                           void* user, char** report);

/* Shard of `count` holding the canonical form of a crossing-form
 * instance (every demand joins k and k + n/2). */
RL_API rl_status rl_search_shard_of(const rl_instance* inst,
                                    uint64_t count, uint64_t* index);

#ifdef __cplusplus
}
#endif

#endif /* RINGLOAD_RINGLOAD_H_ */
