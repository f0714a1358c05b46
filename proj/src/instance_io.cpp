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

#include "ringload/instance_io.hpp"

#include <cmath>

#include "json.hpp"
#include "json_util.hpp"

namespace ringload {

using nlohmann::json;

namespace {

[[noreturn]] void SchemaFail(const std::string& what) {
  throw Error(ErrorCode::kSchemaError, what);
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) SchemaFail(where + ": missing field \"" + key + "\"");
  return *it;
}

int IntField(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number_integer()) {
    SchemaFail(where + ": field \"" + key + "\" must be an integer");
  }
  return v.get<int>();
}

// Integer or half-integer JSON number.
Scaled HalfField(const json& v, const char* key, const std::string& where) {
  if (v.is_number_integer()) return Scaled::FromInt(v.get<std::int64_t>());
  if (v.is_number_float()) {
    double twice = v.get<double>() * 2.0;
    if (std::isfinite(twice) && std::nearbyint(twice) == twice &&
        std::fabs(twice) < 1e15) {
      return Scaled::FromRaw(static_cast<std::int64_t>(twice) * (kScale / 2));
    }
  }
  SchemaFail(where + ": field \"" + key +
             "\" must be an integer or half-integer");
}

}  // namespace

namespace detail {

json HalfNumber(Scaled value) {
  if (value.raw() % (kScale / 2) != 0) {
    throw Error(ErrorCode::kSchemaError,
                value.ToString() + " is not an integer or half-integer");
  }
  if (value.is_integral()) return json(value.raw() / kScale);
  return json(static_cast<double>(value.raw()) / kScale);
}

}  // namespace detail

InstanceDocument ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
  if (!doc.is_object()) SchemaFail("document must be an object");

  InstanceDocument out;
  out.instance.n = IntField(doc, "n", "document");
  const json& demands = Field(doc, "demands", "document");
  if (!demands.is_array()) SchemaFail("\"demands\" must be an array");

  std::size_t with_cw = 0;
  SplitRouting split;
  for (std::size_t t = 0; t < demands.size(); ++t) {
    const json& entry = demands[t];
    std::string where = "demands[" + std::to_string(t) + "]";
    if (!entry.is_object()) SchemaFail(where + " must be an object");
    Demand dem;
    dem.i = IntField(entry, "i", where);
    dem.j = IntField(entry, "j", where);
    const json& d = Field(entry, "d", where);
    if (!d.is_number_integer()) {
      SchemaFail(where + ": field \"d\" must be an integer");
    }
    dem.d = Scaled::FromInt(d.get<std::int64_t>());
    out.instance.demands.push_back(dem);
    if (auto it = entry.find("cw"); it != entry.end()) {
      split.cw.push_back(HalfField(*it, "cw", where));
      ++with_cw;
    }
  }
  if (with_cw != 0 && with_cw != demands.size()) {
    SchemaFail("\"cw\" must be given for every demand or for none");
  }
  if (with_cw != 0) out.split = std::move(split);
  RequireValid(out.instance, out.split ? &*out.split : nullptr);
  return out;
}

std::string WriteInstance(const RingInstance& inst, const SplitRouting* split) {
  json doc;
  doc["n"] = inst.n;
  json demands = json::array();
  for (std::size_t t = 0; t < inst.demands.size(); ++t) {
    const Demand& dem = inst.demands[t];
    json entry;
    entry["i"] = dem.i;
    entry["j"] = dem.j;
    entry["d"] = detail::HalfNumber(dem.d);
    if (split != nullptr) entry["cw"] = detail::HalfNumber(split->cw[t]);
    demands.push_back(std::move(entry));
  }
  doc["demands"] = std::move(demands);
  return doc.dump(2) + "\n";
}

std::string WriteRouting(const UnsplitRouting& routing, Scaled max_increase,
                         const LoadVector& loads) {
  json doc = detail::RoutingJson(routing, max_increase, loads);
  return doc.dump(2) + "\n";
}

}  // namespace ringload
