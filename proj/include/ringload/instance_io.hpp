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

#ifndef RINGLOAD_INSTANCE_IO_HPP_
#define RINGLOAD_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "ringload/ring_model.hpp"

namespace ringload {

// Instance file:
//   {"n": int, "demands": [{"i": int, "j": int, "d": int, "cw": number?}]}
// "d" is an integer, "cw" an integer or half-integer. Either every demand
// carries "cw" or none does.
struct InstanceDocument {
  RingInstance instance;
  std::optional<SplitRouting> split;

  friend bool operator==(const InstanceDocument&,
                         const InstanceDocument&) = default;
};

// Throws kSyntaxError, kSchemaError or any validation error.
InstanceDocument ParseInstance(std::string_view text);
std::string WriteInstance(const RingInstance& inst,
                          const SplitRouting* split = nullptr);

// Routing output file: {"dirs": [...], "max_increase": "p/q", "loads": [...]}.
std::string WriteRouting(const UnsplitRouting& routing, Scaled max_increase,
                         const LoadVector& loads);

}  // namespace ringload

#endif  // RINGLOAD_INSTANCE_IO_HPP_
