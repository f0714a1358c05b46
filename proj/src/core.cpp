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

#include "ringload/core.hpp"

#include <charconv>
#include <numeric>

namespace ringload {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kNegativeDemand: return "NegativeDemand";
    case ErrorCode::kSplitExceedsDemand: return "SplitExceedsDemand";
    case ErrorCode::kIndexMismatch: return "IndexMismatch";
    case ErrorCode::kInvalidRingSize: return "InvalidRingSize";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kNotParallel: return "NotParallel";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kStartOutOfRange: return "StartOutOfRange";
    case ErrorCode::kEndOutOfRange: return "EndOutOfRange";
    case ErrorCode::kOwnerMismatch: return "OwnerMismatch";
    case ErrorCode::kOddEpsilon: return "OddEpsilon";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kStepMismatch: return "StepMismatch";
    case ErrorCode::kNotMedium: return "NotMedium";
    case ErrorCode::kMediumDemandPresent: return "MediumDemandPresent";
    case ErrorCode::kInternalGuaranteeViolation:
      return "InternalGuaranteeViolation";
    case ErrorCode::kTooManyDemands: return "TooManyDemands";
    case ErrorCode::kNotIntegral: return "NotIntegral";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kInfeasibleParams: return "InfeasibleParams";
    case ErrorCode::kNonRepresentable: return "NonRepresentable";
  }
  return "Unknown";
}

namespace {

using Wide = __int128;

std::int64_t Narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorCode::kNonRepresentable, "rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational Make(Wide num, Wide den) {
  if (den == 0) throw Error(ErrorCode::kNonRepresentable, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(Narrow(num), Narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kNonRepresentable, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::kSyntaxError,
                  "not a rational: '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::kSyntaxError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
              Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
              Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scaled Scaled::FromRational(const Rational& value) {
  Wide raw = Wide(value.num()) * kScale;
  if (raw % value.den() != 0) {
    throw Error(ErrorCode::kNonRepresentable,
                value.ToString() + " is not on the 1/28 grid");
  }
  return Scaled(Narrow(raw / value.den()));
}

Scaled Scaled::Fraction(Scaled value, std::int64_t num, std::int64_t den) {
  Wide raw = Wide(value.raw_) * num;
  if (den == 0 || raw % den != 0) {
    throw Error(ErrorCode::kNonRepresentable,
                value.ToString() + " * " + std::to_string(num) + "/" +
                    std::to_string(den) + " is not on the 1/28 grid");
  }
  return Scaled(Narrow(raw / den));
}

std::int64_t Scaled::ToInt() const {
  if (!is_integral()) {
    throw Error(ErrorCode::kNotIntegral, ToString() + " is not an integer");
  }
  return raw_ / kScale;
}

Scaled Scaled::Half() const {
  if (raw_ % 2 != 0) {
    throw Error(ErrorCode::kNonRepresentable,
                "half of " + ToString() + " is not on the 1/28 grid");
  }
  return Scaled(raw_ / 2);
}

}  // namespace ringload
