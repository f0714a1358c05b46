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

#ifndef RINGLOAD_VERIFY_HPP_
#define RINGLOAD_VERIFY_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringload/exact.hpp"

namespace ringload {

struct VerifyCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string instance;
  std::vector<VerifyCheck> checks;
  // Headline values, e.g. "min_increase" -> "11".
  std::vector<std::pair<std::string, std::string>> values;
  bool passes() const;
};

// Runs every published check of a built-in instance. Throws kUnknownName.
VerifyReport VerifyBuiltin(std::string_view name,
                           const BruteForceOptions& options = {});

}  // namespace ringload

#endif  // RINGLOAD_VERIFY_HPP_
