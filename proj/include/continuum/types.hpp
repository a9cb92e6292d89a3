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

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "continuum/fixed4.hpp"

namespace continuum {

/// Resource dimensions, in the fixed canonical order.
enum class Dim : std::size_t { ram = 0, storage = 1, cpu = 2, gpu = 3, tpu = 4 };

inline constexpr std::size_t kDimCount = 5;

inline constexpr std::array<Dim, kDimCount> kAllDims = {
    Dim::ram, Dim::storage, Dim::cpu, Dim::gpu, Dim::tpu};

/// Short names used in price-expression variables (requested_ram, ...).
constexpr std::string_view dim_short_name(Dim d) {
  switch (d) {
    case Dim::ram: return "ram";
    case Dim::storage: return "storage";
    case Dim::cpu: return "cpu";
    case Dim::gpu: return "gpu";
    case Dim::tpu: return "tpu";
  }
  return "";
}

/// Field names used in files (capacity, unit prices, demand vectors).
constexpr std::string_view dim_field_name(Dim d) {
  switch (d) {
    case Dim::ram: return "ram_gb";
    case Dim::storage: return "storage_gb";
    case Dim::cpu: return "cpu_units";
    case Dim::gpu: return "gpu_units";
    case Dim::tpu: return "tpu_units";
  }
  return "";
}

/// Per-dimension quantity vector (RAM GB, storage GB, CPU/GPU/TPU units).
/// Doubles as a vector of per-unit monthly prices.
struct ResourceVector {
  std::array<Fixed4, kDimCount> v{};

  Fixed4& operator[](Dim d) { return v[static_cast<std::size_t>(d)]; }
  const Fixed4& operator[](Dim d) const { return v[static_cast<std::size_t>(d)]; }

  bool operator==(const ResourceVector&) const = default;

  bool all_non_negative() const {
    for (const auto& x : v) {
      if (x.is_negative()) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& x : v) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
};

inline ResourceVector operator+(const ResourceVector& a, const ResourceVector& b) {
  ResourceVector r;
  for (std::size_t i = 0; i < kDimCount; ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

/// Component-wise minimum; the capping operator.
inline ResourceVector component_min(const ResourceVector& a, const ResourceVector& b) {
  ResourceVector r;
  for (std::size_t i = 0; i < kDimCount; ++i) r.v[i] = fixed_min(a.v[i], b.v[i]);
  return r;
}

/// Geographic position on the reference sphere.
struct GeoPoint {
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;
  double elevation_m = 0.0;

  bool operator==(const GeoPoint&) const = default;
};

constexpr bool geo_point_valid(const GeoPoint& p) {
  return p.latitude_deg >= -90.0 && p.latitude_deg <= 90.0 &&
         p.longitude_deg > -180.0 && p.longitude_deg <= 180.0;
}

/// Geographic zone of interest: a simple polygon in the lat/lon plane.
/// Elevation of vertices is ignored for all zone math.
struct Zone {
  std::vector<GeoPoint> vertices;

  bool operator==(const Zone&) const = default;
};

}  // namespace continuum
