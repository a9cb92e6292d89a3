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

#include "continuum/bench.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "continuum/error.hpp"
#include "continuum/geo.hpp"
#include "continuum/io.hpp"
#include "continuum/log.hpp"
#include "continuum/rng.hpp"

namespace continuum {

std::string_view sweep_name(Sweep s) { return s == Sweep::demand ? "demand" : "nodes"; }

namespace {

std::int64_t level_value(IntRange range, int level) {
  const double span = static_cast<double>(range.second - range.first);
  const double x = static_cast<double>(range.first) + span * (level - 1) / 3.0;
  return std::llround(x);  // half away from zero; values are positive
}

Request request_for(const SuiteSpec& spec, const RequestTemplate& tmpl) {
  Request r;
  r.max_nodes = tmpl.max_nodes;
  r.max_distance_m = tmpl.max_distance_m;
  r.max_price = tmpl.max_price;
  r.allowed_providers = spec.allowed_providers;
  r.allowed_node_types = tmpl.allowed_node_types;
  return r;
}

}  // namespace

std::vector<ScenarioType> expand_suite(const SuiteSpec& spec) {
  std::vector<ScenarioType> types;
  for (const auto& app : spec.apps) {
    for (const auto& scale : spec.scales) {
      const auto users_it = spec.user_ranges.find({app, scale});
      const auto nodes_it = spec.node_ranges.find(scale);
      const auto request_it = spec.request_table.find({app, scale});
      if (users_it == spec.user_ranges.end() || nodes_it == spec.node_ranges.end() ||
          request_it == spec.request_table.end()) {
        throw SchemaError("suite is missing ranges or request for (" + app + ", " + scale + ")");
      }
      const Request request = request_for(spec, request_it->second);
      for (int level = 1; level <= 4; ++level) {
        ScenarioType t;
        t.app = app;
        t.scale = scale;
        t.sweep = Sweep::demand;
        t.level = level;
        t.users = level_value(users_it->second, level);
        t.max_nodes = spec.fixed_nodes_for_demand_sweep;
        t.request = request;
        types.push_back(std::move(t));
      }
      for (int level = 1; level <= 4; ++level) {
        ScenarioType t;
        t.app = app;
        t.scale = scale;
        t.sweep = Sweep::nodes;
        t.level = level;
        t.users = spec.fixed_users_for_node_sweep;
        t.max_nodes = level_value(nodes_it->second, level);
        t.request = request;
        types.push_back(std::move(t));
      }
    }
  }
  return types;
}

double binom_half_cdf(std::int64_t k, std::int64_t n) {
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  const double log_half = std::log(0.5);
  double log_pmf = static_cast<double>(n) * log_half;
  double cdf = std::exp(log_pmf);
  for (std::int64_t j = 0; j < k; ++j) {
    log_pmf += std::log(static_cast<double>(n - j)) - std::log(static_cast<double>(j + 1));
    cdf += std::exp(log_pmf);
  }
  return std::min(cdf, 1.0);
}

MedianCi median_ci(std::vector<double> samples, double level) {
  if (samples.empty()) throw Error("median_ci requires at least one sample");
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();

  MedianCi out;
  out.median = n % 2 == 1 ? samples[n / 2]
                          : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
  if (n < 6) {
    out.low = samples.front();
    out.high = samples.back();
    return out;
  }
  const double tail = (1.0 - level) / 2.0;
  // Largest l with F(l-1) <= tail; smallest u with F(u-1) >= 1-tail.
  std::int64_t lo_rank = 1;
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j) {
    if (binom_half_cdf(j, static_cast<std::int64_t>(n)) <= tail) {
      lo_rank = j + 1;  // l - 1 = j
    } else {
      break;
    }
  }
  std::int64_t hi_rank = static_cast<std::int64_t>(n);
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j) {
    if (binom_half_cdf(j, static_cast<std::int64_t>(n)) >= 1.0 - tail) {
      hi_rank = j + 1;
      break;
    }
  }
  out.low = samples[static_cast<std::size_t>(lo_rank - 1)];
  out.high = samples[static_cast<std::size_t>(hi_rank - 1)];
  return out;
}

namespace {

struct Manifest {
  // (type index, instance index) -> outcome
  std::map<std::pair<std::int64_t, std::int64_t>, InstanceOutcome> completed;
};

Manifest load_manifest(const std::string& path) {
  Manifest m;
  if (path.empty() || !file_exists(path)) return m;
  const Json j = load_structured_file(path);
  if (!j.contains("completed")) return m;
  for (const auto& entry : j.at("completed")) {
    InstanceOutcome outcome;
    outcome.status = entry.at("status").get<std::string>() == "optimal"
                         ? SolveStatus::optimal
                         : SolveStatus::infeasible;
    outcome.total_cost = Fixed4::from_string(entry.at("total_cost").get<std::string>());
    outcome.solve_time_s = get_double(entry.at("solve_time_s"), "/completed/solve_time_s");
    m.completed[{entry.at("type").get<std::int64_t>(), entry.at("k").get<std::int64_t>()}] =
        outcome;
  }
  return m;
}

void save_manifest(const std::string& path, const Manifest& m) {
  if (path.empty()) return;
  Json entries = Json::array();
  for (const auto& [key, outcome] : m.completed) {
    Json e;
    e["type"] = key.first;
    e["k"] = key.second;
    e["status"] = std::string(solve_status_name(outcome.status));
    e["total_cost"] = outcome.total_cost.str();
    e["solve_time_s"] = json_double(outcome.solve_time_s);
    entries.push_back(std::move(e));
  }
  Json j;
  j["completed"] = std::move(entries);
  save_structured_file(path, j);
}

}  // namespace

std::vector<BenchResult> run_suite(const SuiteSpec& spec, const std::vector<Node>& dataset,
                                   const std::string& manifest_path,
                                   const ProgressFn& on_progress) {
  if (dataset.empty()) throw Error("run_suite requires a non-empty enriched dataset");
  const std::vector<ScenarioType> types = expand_suite(spec);
  Manifest manifest = load_manifest(manifest_path);

  std::vector<BenchResult> results;
  results.reserve(types.size());

  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    const ScenarioType& type = types[ti];
    BenchResult result;
    result.scenario = type;

    const auto area_it = spec.areas.find(type.app);
    if (area_it == spec.areas.end()) {
      throw SchemaError("suite has no deployment area for app '" + type.app + "'");
    }
    const DeploymentArea& area = area_it->second;
    const auto profile = builtin_profile(type.app);
    if (!profile) throw SchemaError("unknown built-in profile '" + type.app + "'");

    std::int64_t pool = 0;
    for (const Node& n : dataset) {
      if (ecef_distance_m(n.context.location, area.center) <= area.radius_m) ++pool;
    }
    if (pool < type.max_nodes) {
      result.skipped = true;
      log_warn("scenario " + type.app + "/" + type.scale + "/" +
               std::string(sweep_name(type.sweep)) + "/" + std::to_string(type.level) +
               " skipped: candidate pool " + std::to_string(pool) + " < node level " +
               std::to_string(type.max_nodes));
      results.push_back(std::move(result));
      continue;
    }

    int unsaved = 0;
    for (std::int64_t k = 0; k < spec.instances_per_type; ++k) {
      InstanceOutcome outcome;
      const auto done = manifest.completed.find({static_cast<std::int64_t>(ti), k});
      if (done != manifest.completed.end()) {
        outcome = done->second;
      } else {
        const std::uint64_t instance_seed = derive_seed(spec.master_seed, {ti, static_cast<std::uint64_t>(k)});
        const Topology topo = sample_topology(
            dataset, area.center, area.radius_m, type.max_nodes, spec.rules,
            derive_seed(instance_seed, {tag64("topology")}));
        const Demand demand = generate_demand(type.users, *profile, area.zone,
                                              derive_seed(instance_seed, {tag64("demand")}));
        const PricingDocument doc = map_topology(topo);
        const ProblemInstance inst = encode(doc, demand, type.request);
        const AllocationSolution sol = solve(inst);
        outcome.status = sol.status;
        outcome.total_cost = sol.total_cost;
        outcome.solve_time_s = sol.solve_time_s;
        manifest.completed[{static_cast<std::int64_t>(ti), k}] = outcome;
        // Checkpoint periodically; a crash loses at most 20 instances.
        if (++unsaved >= 20) {
          save_manifest(manifest_path, manifest);
          unsaved = 0;
        }
      }
      result.samples.push_back(outcome.solve_time_s);
      if (outcome.status == SolveStatus::optimal) {
        ++result.n_optimal;
      } else {
        ++result.n_infeasible;
      }
      if (on_progress) on_progress(type, k, outcome);
    }
    if (unsaved > 0) save_manifest(manifest_path, manifest);

    const MedianCi ci = median_ci(result.samples);
    result.median_s = ci.median;
    result.ci_low_s = ci.low;
    result.ci_high_s = ci.high;
    results.push_back(std::move(result));
  }
  return results;
}

std::string results_csv(const std::vector<BenchResult>& results) {
  std::ostringstream out;
  out << "app,scale,sweep,level,users,max_nodes,n_samples,median_s,ci_low_s,ci_high_s,"
         "n_optimal,n_infeasible\n";
  for (const BenchResult& r : results) {
    out << r.scenario.app << ',' << r.scenario.scale << ',' << sweep_name(r.scenario.sweep)
        << ',' << r.scenario.level << ',' << r.scenario.users << ',' << r.scenario.max_nodes
        << ',' << r.samples.size() << ',';
    if (r.samples.empty()) {
      out << ",,,";
    } else {
      out << json_double(r.median_s).get<std::string>() << ','
          << json_double(r.ci_low_s).get<std::string>() << ','
          << json_double(r.ci_high_s).get<std::string>() << ',';
    }
    out << r.n_optimal << ',' << r.n_infeasible << '\n';
  }
  return out.str();
}

}  // namespace continuum
