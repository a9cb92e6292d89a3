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

#include "continuum/fixed4.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "continuum/error.hpp"

namespace continuum {

Fixed4 Fixed4::from_double(double v) {
  const double scaled = v * static_cast<double>(kScale);
  const double rounded = v >= 0 ? std::floor(scaled + 0.5) : -std::floor(-scaled + 0.5);
  return from_units(static_cast<std::int64_t>(rounded));
}

Fixed4 Fixed4::from_string(std::string_view s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  bool negative = false;
  if (i < n && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i]))) {
    throw ParseError("invalid decimal literal: '" + std::string(s) + "'");
  }
  std::int64_t whole = 0;
  int whole_digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
    if (++whole_digits > 14) {
      throw ParseError("decimal literal out of range: '" + std::string(s) + "'");
    }
    whole = whole * 10 + (s[i] - '0');
    ++i;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  int round_carry = 0;
  if (i < n && s[i] == '.') {
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("invalid decimal literal: '" + std::string(s) + "'");
    }
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (frac_digits < 4) {
        frac = frac * 10 + (s[i] - '0');
        ++frac_digits;
      } else if (frac_digits == 4) {
        round_carry = (s[i] - '0') >= 5 ? 1 : 0;
        ++frac_digits;
      }
      ++i;
    }
  }
  if (i != n) {
    throw ParseError("invalid decimal literal: '" + std::string(s) + "'");
  }
  while (frac_digits < 4) {
    frac *= 10;
    ++frac_digits;
  }
  const std::int64_t units = whole * kScale + frac + round_carry;
  return from_units(negative ? -units : units);
}

Fixed4 Fixed4::ceil3(double v) {
  const double scaled = v * 1000.0;
  const double nearest = std::floor(scaled + 0.5);
  const double milli =
      std::fabs(scaled - nearest) < 1e-6 * std::fmax(1.0, std::fabs(scaled))
          ? nearest
          : std::ceil(scaled);
  return from_units(static_cast<std::int64_t>(milli) * 10);
}

std::string Fixed4::str() const {
  const bool neg = units_ < 0;
  const std::int64_t abs_units = neg ? -units_ : units_;
  const std::int64_t whole = abs_units / kScale;
  const std::int64_t frac = abs_units % kScale;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%s%lld.%04lld", neg ? "-" : "",
                static_cast<long long>(whole), static_cast<long long>(frac));
  return buf;
}

std::string Fixed4::str_minimal() const {
  std::string s = str();
  const auto dot = s.find('.');
  auto last = s.find_last_not_of('0');
  if (last == dot) last -= 1;
  return s.substr(0, last + 1);
}

std::string Fixed4::str_display() const {
  const bool neg = units_ < 0;
  const std::int64_t abs_units = neg ? -units_ : units_;
  const std::int64_t cents = (abs_units + 50) / 100;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", neg ? "-" : "",
                static_cast<long long>(cents / 100), static_cast<long long>(cents % 100));
  return buf;
}

Fixed4 fixed_mul(Fixed4 a, Fixed4 b) {
  const __int128 p = static_cast<__int128>(a.units()) * static_cast<__int128>(b.units());
  const __int128 half = Fixed4::kScale / 2;
  const __int128 q = p >= 0 ? (p + half) / Fixed4::kScale : -((-p + half) / Fixed4::kScale);
  return Fixed4::from_units(static_cast<std::int64_t>(q));
}

}  // namespace continuum
