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

#include <string>

#include "continuum/types.hpp"

namespace continuum {

/// Spherical Earth radius used everywhere, in meters.
inline constexpr double kEarthRadiusM = 6'371'000.0;

using DistanceMeters = double;

/// Great-circle distance; elevation ignored.
DistanceMeters haversine_m(const GeoPoint& a, const GeoPoint& b);

/// Straight-line distance through the sphere, elevation included
/// (spherical-Earth ECEF conversion).
DistanceMeters ecef_distance_m(const GeoPoint& a, const GeoPoint& b);

/// Ray casting in the lat/lon plane; boundary points count as inside.
bool point_in_polygon(const GeoPoint& p, const Zone& z);

/// 0 when p lies in the closed zone region; otherwise the maximum
/// great-circle distance from p to any point of the polygon, attained at a
/// vertex.
DistanceMeters zone_max_distance_m(const GeoPoint& p, const Zone& z);

/// At least 3 vertices, valid coordinates, no self-crossing edges.
/// Returns an empty string when valid, a description otherwise.
std::string zone_validation_error(const Zone& z);

}  // namespace continuum
