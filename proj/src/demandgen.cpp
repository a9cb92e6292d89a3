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

#include "continuum/demandgen.hpp"

#include <cmath>

#include "continuum/error.hpp"
#include "continuum/rng.hpp"

namespace continuum {

void validate_profile(const AppProfile& p) {
  const auto fail = [&](const std::string& field, const std::string& why) {
    throw SchemaError("/" + field + ": " + why + " (profile '" + p.profile_id + "')");
  };
  if (p.p_s < 0 || p.p_s > 1) fail("p_s", "must be in [0, 1]");
  if (p.alpha_s < 1) fail("alpha_s", "must be >= 1");
  if (p.rate_mean < 0) fail("rate_mean", "must be >= 0");
  if (p.rate_cv < 0) fail("rate_cv", "must be >= 0");
  if (p.ram_base_gb < 0 || p.ram_session_gb < 0 || p.beta_s < 0) {
    fail("ram", "memory coefficients must be >= 0");
  }
  if (p.sto_base_gb < 0 || p.sto_session_gb < 0) fail("sto", "storage coefficients must be >= 0");
  if (p.t_cpu_s < 0 || p.t_gpu_s < 0 || p.t_tpu_s < 0) fail("t", "service times must be >= 0");
  if (p.u_cpu <= 0 || p.u_cpu >= 1 || p.u_gpu <= 0 || p.u_gpu >= 1 || p.u_tpu <= 0 ||
      p.u_tpu >= 1) {
    fail("u", "target utilizations must be in (0, 1)");
  }
  if (p.phi_gpu < 0 || p.phi_gpu > 1 || p.phi_tpu < 0 || p.phi_tpu > 1 ||
      p.phi_gpu + p.phi_tpu > 1) {
    fail("phi", "request fractions must be in [0, 1] and sum to at most 1");
  }
  if (p.log_gb_per_req < 0 || p.retention_window_s < 0) {
    fail("log", "log volume and retention must be >= 0");
  }
}

const std::vector<AppProfile>& builtin_profiles() {
  static const std::vector<AppProfile> profiles = [] {
    std::vector<AppProfile> list;

    AppProfile cctv;
    cctv.profile_id = "cctv";
    cctv.p_s = 0.5;
    cctv.alpha_s = 1.2;
    cctv.rate_mean = 1.0;
    cctv.rate_cv = 0.25;
    cctv.ram_base_gb = 8.0;
    cctv.ram_session_gb = 0.05;
    cctv.beta_s = 1.0;
    cctv.sto_base_gb = 100.0;
    cctv.sto_session_gb = 2.0;
    cctv.t_cpu_s = 0.04;
    cctv.t_gpu_s = 0.01;
    cctv.t_tpu_s = 0.0;
    cctv.u_cpu = 0.6;
    cctv.u_gpu = 0.7;
    cctv.u_tpu = 0.7;
    cctv.phi_gpu = 0.2;
    cctv.phi_tpu = 0.0;
    cctv.log_gb_per_req = 5e-7;
    cctv.retention_window_s = 604800;
    list.push_back(cctv);

    AppProfile vr;
    vr.profile_id = "vr";
    vr.p_s = 0.3;
    vr.alpha_s = 1.3;
    vr.rate_mean = 3.0;
    vr.rate_cv = 0.3;
    vr.ram_base_gb = 6.0;
    vr.ram_session_gb = 0.08;
    vr.beta_s = 1.5;
    vr.sto_base_gb = 50.0;
    vr.sto_session_gb = 0.5;
    vr.t_cpu_s = 0.01;
    vr.t_gpu_s = 0.02;
    vr.t_tpu_s = 0.004;
    vr.u_cpu = 0.55;
    vr.u_gpu = 0.7;
    vr.u_tpu = 0.7;
    vr.phi_gpu = 0.6;
    vr.phi_tpu = 0.1;
    vr.log_gb_per_req = 2e-7;
    vr.retention_window_s = 86400;
    list.push_back(vr);

    AppProfile robot;
    robot.profile_id = "robot";
    robot.p_s = 0.6;
    robot.alpha_s = 1.4;
    robot.rate_mean = 8.0;
    robot.rate_cv = 0.2;
    robot.ram_base_gb = 2.0;
    robot.ram_session_gb = 0.01;
    robot.beta_s = 0.5;
    robot.sto_base_gb = 20.0;
    robot.sto_session_gb = 0.05;
    robot.t_cpu_s = 0.004;
    robot.t_gpu_s = 0.002;
    robot.t_tpu_s = 0.0;
    robot.u_cpu = 0.5;
    robot.u_gpu = 0.6;
    robot.u_tpu = 0.6;
    robot.phi_gpu = 0.15;
    robot.phi_tpu = 0.0;
    robot.log_gb_per_req = 1e-7;
    robot.retention_window_s = 259200;
    list.push_back(robot);

    AppProfile lidar;
    lidar.profile_id = "lidar";
    lidar.p_s = 0.4;
    lidar.alpha_s = 1.2;
    lidar.rate_mean = 0.5;
    lidar.rate_cv = 0.4;
    lidar.ram_base_gb = 4.0;
    lidar.ram_session_gb = 0.02;
    lidar.beta_s = 1.0;
    lidar.sto_base_gb = 200.0;
    lidar.sto_session_gb = 5.0;
    lidar.t_cpu_s = 0.06;
    lidar.t_gpu_s = 0.015;
    lidar.t_tpu_s = 0.01;
    lidar.u_cpu = 0.65;
    lidar.u_gpu = 0.7;
    lidar.u_tpu = 0.7;
    lidar.phi_gpu = 0.25;
    lidar.phi_tpu = 0.05;
    lidar.log_gb_per_req = 2e-6;
    lidar.retention_window_s = 2592000;
    list.push_back(lidar);

    return list;
  }();
  return profiles;
}

std::optional<AppProfile> builtin_profile(std::string_view id) {
  for (const auto& p : builtin_profiles()) {
    if (p.profile_id == id) return p;
  }
  return std::nullopt;
}

std::int64_t sample_active_users(std::int64_t n_users, double p_s, std::uint64_t rng_seed) {
  if (n_users <= 0) return 0;
  if (p_s <= 0.0) return 0;
  if (p_s >= 1.0) return n_users;
  Rng rng(derive_seed(rng_seed, {tag64("active_users")}));
  return binomial_inverse(n_users, p_s, rng.next_unit());
}

double aggregate_rate(std::int64_t active_users, const AppProfile& profile,
                      std::uint64_t rng_seed) {
  if (active_users <= 0) return 0.0;
  const double sd = profile.rate_cv * profile.rate_mean;
  double sum = 0.0;
  for (std::int64_t user = 0; user < active_users; ++user) {
    double rate = profile.rate_mean;
    if (sd > 0.0) {
      Rng rng(derive_seed(rng_seed, {tag64("user_rate"), static_cast<std::uint64_t>(user)}));
      rate += sd * inv_normal_cdf(rng.next_unit());
      if (rate < 0.0) rate = 0.0;  // zero-clamped normal
    }
    sum += rate;
  }
  return profile.alpha_s * sum;
}

double ram_demand(std::int64_t active_users, const AppProfile& profile) {
  const double n = static_cast<double>(active_users);
  return profile.alpha_s *
         (profile.ram_base_gb + profile.beta_s * std::sqrt(n) + profile.ram_session_gb * n);
}

ResourceVector compute_demand_vector(double rate, std::int64_t active_users,
                                     const AppProfile& profile) {
  const double n = static_cast<double>(active_users);
  const double cpu = rate * profile.t_cpu_s / profile.u_cpu;
  const double gpu = profile.phi_gpu * rate * profile.t_gpu_s / profile.u_gpu;
  const double tpu = profile.phi_tpu * rate * profile.t_tpu_s / profile.u_tpu;
  const double storage =
      profile.alpha_s * (profile.sto_base_gb + profile.sto_session_gb * n +
                         rate * profile.log_gb_per_req * profile.retention_window_s);

  ResourceVector v;
  v[Dim::ram] = Fixed4::ceil3(ram_demand(active_users, profile));
  v[Dim::storage] = Fixed4::ceil3(storage);
  v[Dim::cpu] = Fixed4::ceil3(cpu);
  v[Dim::gpu] = Fixed4::ceil3(gpu);
  v[Dim::tpu] = Fixed4::ceil3(tpu);
  return v;
}

Demand generate_demand(std::int64_t n_users, const AppProfile& profile, const Zone& zone,
                       std::uint64_t seed) {
  validate_profile(profile);
  const std::int64_t active = sample_active_users(n_users, profile.p_s, seed);
  const double rate = aggregate_rate(active, profile, seed);
  Demand demand;
  demand.vector = compute_demand_vector(rate, active, profile);
  demand.zone = zone;
  demand.user_count = n_users;
  return demand;
}

}  // namespace continuum
