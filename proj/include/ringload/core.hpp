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

#ifndef RINGLOAD_CORE_HPP_
#define RINGLOAD_CORE_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringload {

// All quantities live on a 1/28 grid: the algorithm constants are multiples
// of D/14 and crossover/medium steps introduce halves of those.
inline constexpr std::int64_t kScale = 28;

enum class ErrorCode {
  kNodeOutOfRange,
  kNegativeDemand,
  kSplitExceedsDemand,
  kIndexMismatch,
  kInvalidRingSize,
  kSyntaxError,
  kSchemaError,
  kNotParallel,
  kLengthMismatch,
  kStartOutOfRange,
  kEndOutOfRange,
  kOwnerMismatch,
  kOddEpsilon,
  kInvalidWitness,
  kStepMismatch,
  kNotMedium,
  kMediumDemandPresent,
  kInternalGuaranteeViolation,
  kTooManyDemands,
  kNotIntegral,
  kUnknownName,
  kInfeasibleParams,
  kNonRepresentable,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // "p" for integers, "p/q" otherwise.
  std::string ToString() const;
  static Rational Parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Fixed-point value stored as raw/kScale. Conversions from rationals that do
// not land on the grid throw kNonRepresentable instead of rounding.
class Scaled {
 public:
  constexpr Scaled() = default;

  static constexpr Scaled FromRaw(std::int64_t raw) { return Scaled(raw); }
  static constexpr Scaled FromInt(std::int64_t value) {
    return Scaled(value * kScale);
  }
  static Scaled FromRational(const Rational& value);
  // value * num / den, exact or throws.
  static Scaled Fraction(Scaled value, std::int64_t num, std::int64_t den);

  constexpr std::int64_t raw() const { return raw_; }
  constexpr bool is_integral() const { return raw_ % kScale == 0; }
  std::int64_t ToInt() const;  // throws unless integral
  Rational ToRational() const { return Rational(raw_, kScale); }
  std::string ToString() const { return ToRational().ToString(); }

  Scaled Half() const;  // throws kNonRepresentable on odd raw value

  constexpr Scaled operator-() const { return Scaled(-raw_); }
  constexpr Scaled& operator+=(Scaled o) {
    raw_ += o.raw_;
    return *this;
  }
  constexpr Scaled& operator-=(Scaled o) {
    raw_ -= o.raw_;
    return *this;
  }
  friend constexpr Scaled operator+(Scaled a, Scaled b) {
    return Scaled(a.raw_ + b.raw_);
  }
  friend constexpr Scaled operator-(Scaled a, Scaled b) {
    return Scaled(a.raw_ - b.raw_);
  }
  friend constexpr Scaled operator*(Scaled a, std::int64_t k) {
    return Scaled(a.raw_ * k);
  }
  friend constexpr Scaled operator*(std::int64_t k, Scaled a) {
    return Scaled(a.raw_ * k);
  }
  friend constexpr auto operator<=>(Scaled a, Scaled b) = default;

 private:
  constexpr explicit Scaled(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = 0;
};

inline Scaled Abs(Scaled v) { return v < Scaled() ? -v : v; }

}  // namespace ringload

#endif  // RINGLOAD_CORE_HPP_
