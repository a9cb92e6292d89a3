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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "continuum/domain.hpp"

namespace continuum {

/// Workload profile driving synthetic demand generation.
struct AppProfile {
  std::string profile_id;
  double p_s = 1.0;          // service concurrency level, in [0, 1]
  double alpha_s = 1.0;      // safety factor, >= 1
  double rate_mean = 1.0;    // per-user request rate (req/s)
  double rate_cv = 0.0;      // coefficient of variation, >= 0
  double ram_base_gb = 0.0;
  double ram_session_gb = 0.0;
  double beta_s = 0.0;       // shared-memory coefficient (GB per sqrt(user))
  double sto_base_gb = 0.0;
  double sto_session_gb = 0.0;
  double t_cpu_s = 0.0;      // CPU service time per request (s)
  double t_gpu_s = 0.0;
  double t_tpu_s = 0.0;
  double u_cpu = 0.5;        // target utilizations, in (0, 1)
  double u_gpu = 0.5;
  double u_tpu = 0.5;
  double phi_gpu = 0.0;      // fraction of requests on the GPU
  double phi_tpu = 0.0;
  double log_gb_per_req = 0.0;     // L_s
  double retention_window_s = 0.0; // W_s
};

/// Throws SchemaError when a field is outside its documented range.
void validate_profile(const AppProfile& p);

/// Built-in profiles: cctv, vr, robot, lidar. The parameter values are
/// artifact defaults chosen for plausibility, not measurements.
const std::vector<AppProfile>& builtin_profiles();
std::optional<AppProfile> builtin_profile(std::string_view id);

/// One Binomial(N, p_s) draw by CDF inversion from the seeded stream.
std::int64_t sample_active_users(std::int64_t n_users, double p_s, std::uint64_t rng_seed);

/// alpha_s * sum of per-user rates; each rate is a zero-clamped normal
/// with mean rate_mean and sd rate_cv * rate_mean, keyed by user index.
double aggregate_rate(std::int64_t active_users, const AppProfile& profile,
                      std::uint64_t rng_seed);

/// alpha_s * (base + beta_s * sqrt(N_a) + session * N_a), in GB.
double ram_demand(std::int64_t active_users, const AppProfile& profile);

/// Assembles all five dimensions from the rate and active-user count; each
/// component rounds up at 3 decimals.
ResourceVector compute_demand_vector(double rate, std::int64_t active_users,
                                     const AppProfile& profile);

/// Full pipeline: active users -> aggregate rate -> demand vector.
Demand generate_demand(std::int64_t n_users, const AppProfile& profile, const Zone& zone,
                       std::uint64_t seed);

}  // namespace continuum
