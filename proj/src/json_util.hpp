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

// Shared JSON helpers for the report and file writers. Internal header.

#ifndef RINGLOAD_SRC_JSON_UTIL_HPP_
#define RINGLOAD_SRC_JSON_UTIL_HPP_

#include <vector>

#include "json.hpp"
#include "ringload/ring_model.hpp"

namespace ringload::detail {

// Integer or half-integer as a JSON number; throws otherwise.
nlohmann::json HalfNumber(Scaled value);

inline nlohmann::json RationalStrings(const std::vector<Scaled>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (Scaled v : values) out.push_back(v.ToString());
  return out;
}

inline nlohmann::json DirectionStrings(const UnsplitRouting& routing) {
  nlohmann::json out = nlohmann::json::array();
  for (Direction d : routing.dirs) {
    out.push_back(d == Direction::kClockwise ? "cw" : "ccw");
  }
  return out;
}

inline nlohmann::json RoutingJson(const UnsplitRouting& routing,
                                  Scaled max_increase,
                                  const LoadVector& loads) {
  nlohmann::json doc;
  doc["dirs"] = DirectionStrings(routing);
  doc["max_increase"] = max_increase.ToString();
  doc["loads"] = RationalStrings(loads);
  return doc;
}

}  // namespace ringload::detail

#endif  // RINGLOAD_SRC_JSON_UTIL_HPP_
