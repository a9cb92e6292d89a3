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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "continuum/demandgen.hpp"
#include "continuum/solver.hpp"
#include "continuum/topogen.hpp"

namespace continuum {

/// Where an application deploys: sampling center/radius plus the zone of
/// interest used for demand and distance constraints.
struct DeploymentArea {
  GeoPoint center;
  double radius_m = 0.0;
  Zone zone;
};

/// Per (app, scale) request constraints; providers come from the suite.
struct RequestTemplate {
  Fixed4 max_distance_m;
  std::int64_t max_nodes = 1;
  std::set<NodeType> allowed_node_types;
  std::optional<Money> max_price;  // omitted = unbounded
};

using IntRange = std::pair<std::int64_t, std::int64_t>;

struct SuiteSpec {
  std::vector<std::string> apps;    // built-in profile ids
  std::vector<std::string> scales;  // e.g. S, M, L
  std::map<std::pair<std::string, std::string>, IntRange> user_ranges;  // (app, scale)
  std::map<std::string, IntRange> node_ranges;                          // scale
  std::map<std::pair<std::string, std::string>, RequestTemplate> request_table;
  std::map<std::string, DeploymentArea> areas;  // app
  std::set<std::string> allowed_providers;
  std::vector<BusinessRule> rules;
  EnrichmentConfig enrichment;
  std::int64_t fixed_nodes_for_demand_sweep = 20;
  std::int64_t fixed_users_for_node_sweep = 100;
  std::int64_t instances_per_type = 100;
  std::uint64_t master_seed = 0;
};

enum class Sweep { demand, nodes };

std::string_view sweep_name(Sweep s);

struct ScenarioType {
  std::string app;
  std::string scale;
  Sweep sweep = Sweep::demand;
  int level = 1;           // 1..4
  std::int64_t users = 0;
  std::int64_t max_nodes = 0;  // candidate-node cap for topology sampling
  Request request;
};

struct InstanceOutcome {
  SolveStatus status = SolveStatus::infeasible;
  Money total_cost;
  double solve_time_s = 0.0;
};

struct BenchResult {
  ScenarioType scenario;
  std::vector<double> samples;  // solve times, seconds
  double median_s = 0.0;
  double ci_low_s = 0.0;
  double ci_high_s = 0.0;
  std::int64_t n_optimal = 0;
  std::int64_t n_infeasible = 0;
  bool skipped = false;  // candidate pool smaller than the node level
};

/// 4 demand-sweep and 4 node-sweep scenario types per (app, scale); level
/// values are uniformly spaced over the configured ranges, rounded half-up.
std::vector<ScenarioType> expand_suite(const SuiteSpec& spec);

struct MedianCi {
  double median = 0.0;
  double low = 0.0;
  double high = 0.0;
};

/// Median with a nonparametric (binomial order-statistic) confidence
/// interval; [min, max] for fewer than 6 samples. Throws on empty input.
MedianCi median_ci(std::vector<double> samples, double level = 0.95);

/// Binomial(n, 1/2) CDF at k, used for the interval ranks.
double binom_half_cdf(std::int64_t k, std::int64_t n);

using ProgressFn =
    std::function<void(const ScenarioType&, std::int64_t k, const InstanceOutcome&)>;

/// Runs every (type, instance) pair: sample topology, generate demand, map,
/// encode, solve. Instance seeds derive from (master_seed, type index, k).
/// A non-empty manifest path makes the run resumable. Serial execution;
/// solve timing is the solve call only.
std::vector<BenchResult> run_suite(const SuiteSpec& spec, const std::vector<Node>& dataset,
                                   const std::string& manifest_path,
                                   const ProgressFn& on_progress);

/// CSV with one row per scenario in expansion order.
std::string results_csv(const std::vector<BenchResult>& results);

}  // namespace continuum
