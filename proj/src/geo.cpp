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

#include "continuum/geo.hpp"

#include <algorithm>
#include <cmath>

namespace continuum {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

struct Vec3 {
  double x, y, z;
};

Vec3 to_ecef(const GeoPoint& p) {
  const double lat = p.latitude_deg * kDegToRad;
  const double lon = p.longitude_deg * kDegToRad;
  const double r = kEarthRadiusM + p.elevation_m;
  return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
          r * std::sin(lat)};
}

// Orientation of (a, b, c) in the lat/lon plane.
int orientation(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c) {
  const double cross = (b.longitude_deg - a.longitude_deg) * (c.latitude_deg - a.latitude_deg) -
                       (b.latitude_deg - a.latitude_deg) * (c.longitude_deg - a.longitude_deg);
  if (cross > 1e-15) return 1;
  if (cross < -1e-15) return -1;
  return 0;
}

bool on_segment(const GeoPoint& a, const GeoPoint& b, const GeoPoint& p) {
  if (orientation(a, b, p) != 0) return false;
  return p.latitude_deg >= std::min(a.latitude_deg, b.latitude_deg) - 1e-12 &&
         p.latitude_deg <= std::max(a.latitude_deg, b.latitude_deg) + 1e-12 &&
         p.longitude_deg >= std::min(a.longitude_deg, b.longitude_deg) - 1e-12 &&
         p.longitude_deg <= std::max(a.longitude_deg, b.longitude_deg) + 1e-12;
}

// Proper crossing between open segments (shared endpoints do not count).
bool segments_cross(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c,
                    const GeoPoint& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

}  // namespace

DistanceMeters haversine_m(const GeoPoint& a, const GeoPoint& b) {
  const double lat1 = a.latitude_deg * kDegToRad;
  const double lat2 = b.latitude_deg * kDegToRad;
  const double dlat = lat2 - lat1;
  const double dlon = (b.longitude_deg - a.longitude_deg) * kDegToRad;
  const double s1 = std::sin(dlat / 2.0);
  const double s2 = std::sin(dlon / 2.0);
  const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

DistanceMeters ecef_distance_m(const GeoPoint& a, const GeoPoint& b) {
  const Vec3 pa = to_ecef(a);
  const Vec3 pb = to_ecef(b);
  const double dx = pa.x - pb.x;
  const double dy = pa.y - pb.y;
  const double dz = pa.z - pb.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

bool point_in_polygon(const GeoPoint& p, const Zone& z) {
  const auto& vs = z.vertices;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(vs[i], vs[(i + 1) % n], p)) return true;
  }
  // Ray cast toward +longitude.
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const GeoPoint& a = vs[i];
    const GeoPoint& b = vs[(i + 1) % n];
    const bool a_above = a.latitude_deg > p.latitude_deg;
    const bool b_above = b.latitude_deg > p.latitude_deg;
    if (a_above == b_above) continue;
    const double t = (p.latitude_deg - a.latitude_deg) / (b.latitude_deg - a.latitude_deg);
    const double lon_cross = a.longitude_deg + t * (b.longitude_deg - a.longitude_deg);
    if (lon_cross > p.longitude_deg) inside = !inside;
  }
  return inside;
}

DistanceMeters zone_max_distance_m(const GeoPoint& p, const Zone& z) {
  if (point_in_polygon(p, z)) return 0.0;
  double best = 0.0;
  for (const GeoPoint& v : z.vertices) {
    best = std::max(best, haversine_m(p, v));
  }
  return best;
}

std::string zone_validation_error(const Zone& z) {
  const auto& vs = z.vertices;
  if (vs.size() < 3) return "zone needs at least 3 vertices";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!geo_point_valid(vs[i])) {
      return "zone vertex " + std::to_string(i) + " has invalid coordinates";
    }
  }
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip adjacent edges (they share an endpoint).
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_cross(vs[i], vs[(i + 1) % n], vs[j], vs[(j + 1) % n])) {
        return "zone edges " + std::to_string(i) + " and " + std::to_string(j) +
               " cross";
      }
    }
  }
  return "";
}

}  // namespace continuum
