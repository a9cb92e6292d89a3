// Copyright 2026 The continuum-alloc Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace continuum {

/// Fixed-point decimal with 4 fractional digits, stored as scaled int64.
/// Used for money and for resource quantities so that sums, caps and
/// comparisons are exact and platform-independent.
class Fixed4 {
 public:
  static constexpr std::int64_t kScale = 10'000;

  constexpr Fixed4() = default;

  static constexpr Fixed4 from_units(std::int64_t units) {
    Fixed4 f;
    f.units_ = units;
    return f;
  }

  static constexpr Fixed4 from_int(std::int64_t whole) {
    return from_units(whole * kScale);
  }

  /// Rounds half away from zero at the 4th decimal.
  static Fixed4 from_double(double v);

  /// Exact decimal parse ("1.1", "24.0000", "-3"). Digits beyond the 4th
  /// fractional place round half-up. Throws ParseError on malformed input.
  static Fixed4 from_string(std::string_view s);

  /// Rounds v up to 3 decimals; values within 1e-6 (in 3-decimal units) of a
  /// grid point snap to it instead of ceiling past it.
  static Fixed4 ceil3(double v);

  constexpr std::int64_t units() const { return units_; }
  double to_double() const { return static_cast<double>(units_) / kScale; }
  constexpr bool is_zero() const { return units_ == 0; }
  constexpr bool is_negative() const { return units_ < 0; }

  /// "24.0000" — canonical 4-decimal rendering for files.
  std::string str() const;
  /// "24", "1.1" — trailing zeros stripped, for price expressions.
  std::string str_minimal() const;
  /// "24.00" — display rendering, half-up to 2 decimals.
  std::string str_display() const;

  friend constexpr Fixed4 operator+(Fixed4 a, Fixed4 b) {
    return from_units(a.units_ + b.units_);
  }
  friend constexpr Fixed4 operator-(Fixed4 a, Fixed4 b) {
    return from_units(a.units_ - b.units_);
  }
  Fixed4& operator+=(Fixed4 o) {
    units_ += o.units_;
    return *this;
  }
  Fixed4& operator-=(Fixed4 o) {
    units_ -= o.units_;
    return *this;
  }

  friend constexpr auto operator<=>(Fixed4, Fixed4) = default;

 private:
  std::int64_t units_ = 0;
};

/// (a*b) at 4 decimals, rounded half away from zero, 128-bit intermediate.
Fixed4 fixed_mul(Fixed4 a, Fixed4 b);

constexpr Fixed4 fixed_min(Fixed4 a, Fixed4 b) { return a < b ? a : b; }
constexpr Fixed4 fixed_max(Fixed4 a, Fixed4 b) { return a < b ? b : a; }

using Money = Fixed4;

}  // namespace continuum
