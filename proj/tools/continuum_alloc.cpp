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

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

#include "continuum/error.hpp"
#include "continuum/io.hpp"
#include "continuum/log.hpp"

namespace {

using namespace continuum;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDataError = 65;
constexpr int kExitInternal = 70;

GeoPoint parse_center(const std::string& text) {
  GeoPoint p;
  const auto first = text.find(',');
  const auto second = text.find(',', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw ParseError("--center expects LAT,LON,ELEV");
  }
  try {
    p.latitude_deg = std::stod(text.substr(0, first));
    p.longitude_deg = std::stod(text.substr(first + 1, second - first - 1));
    p.elevation_m = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw ParseError("--center expects three numbers LAT,LON,ELEV");
  }
  if (!geo_point_valid(p)) throw ParseError("--center coordinates out of range");
  return p;
}

Provenance make_provenance(const PricingDocument& doc, const DemandFile& demand,
                           const Request& request) {
  Provenance prov;
  prov.pricing = fnv1a_hex(canonical_bytes(pricing_to_json(doc)));
  prov.demand = fnv1a_hex(canonical_bytes(demand_to_json(demand)));
  prov.request = fnv1a_hex(canonical_bytes(request_to_json(request)));
  return prov;
}

AppProfile resolve_profile(const std::string& arg) {
  if (const auto builtin = builtin_profile(arg)) return *builtin;
  if (file_exists(arg)) return profile_from_json(load_structured_file(arg));
  throw Error("unknown profile '" + arg + "': not a built-in id and not a file");
}

int emit_solution(const AllocationSolution& sol, const std::string& out_path) {
  save_structured_file(out_path, solution_to_json(sol));
  std::cout << solve_status_name(sol.status) << " cost=" << sol.total_cost.str_display()
            << " selected=" << sol.selection.size() << " explored=" << sol.nodes_explored
            << "\n";
  return sol.status == SolveStatus::optimal ? kExitOk : kExitInfeasible;
}

int run(int argc, char** argv) {
  CLI::App app{"Pricing-driven resource allocation for the computing continuum"};
  app.require_subcommand(1);

  // gen-topology
  auto* gen_topology = app.add_subcommand(
      "gen-topology", "Sample a topology from an enriched site dataset");
  std::string gt_dataset, gt_config, gt_center, gt_rules, gt_out;
  double gt_radius = 0.0;
  std::int64_t gt_max_nodes = -1;
  std::uint64_t gt_seed = 0;
  gen_topology->add_option("--dataset", gt_dataset, "Site CSV")->required();
  gen_topology->add_option("--config", gt_config, "Enrichment config YAML")->required();
  gen_topology->add_option("--center", gt_center, "Center LAT,LON,ELEV")->required();
  gen_topology->add_option("--radius", gt_radius, "Sampling radius in meters")->required();
  gen_topology->add_option("--max-nodes", gt_max_nodes, "Cap on candidate nodes");
  gen_topology->add_option("--rules", gt_rules, "Business rules JSON");
  gen_topology->add_option("--seed", gt_seed, "Sampling seed")->required();
  gen_topology->add_option("-o,--out", gt_out, "Output topology JSON")->required();

  // gen-demand
  auto* gen_demand_cmd =
      app.add_subcommand("gen-demand", "Generate a synthetic demand document");
  std::string gd_profile, gd_zone, gd_out;
  std::int64_t gd_users = 0;
  std::uint64_t gd_seed = 0;
  gen_demand_cmd->add_option("--profile", gd_profile, "Built-in id or profile YAML")
      ->required();
  gen_demand_cmd->add_option("--users", gd_users, "Number of users")->required();
  gen_demand_cmd->add_option("--zone", gd_zone, "Zone JSON")->required();
  gen_demand_cmd->add_option("--seed", gd_seed, "Demand seed")->required();
  gen_demand_cmd->add_option("-o,--out", gd_out, "Output demand JSON")->required();

  // map
  auto* map_cmd = app.add_subcommand("map", "Project a topology into a pricing document");
  std::string map_topology_path, map_out;
  map_cmd->add_option("--topology", map_topology_path, "Topology JSON")->required();
  map_cmd->add_option("-o,--out", map_out, "Output pricing document")->required();

  // encode
  auto* encode_cmd =
      app.add_subcommand("encode", "Specialize a pricing document with demand and request");
  std::string en_pricing, en_demand, en_request, en_out;
  encode_cmd->add_option("--pricing", en_pricing, "Symbolic pricing document")->required();
  encode_cmd->add_option("--demand", en_demand, "Demand JSON")->required();
  encode_cmd->add_option("--request", en_request, "Request JSON")->required();
  encode_cmd->add_option("-o,--out", en_out, "Output problem instance JSON")->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Compute the cost-optimal selection");
  std::string so_instance, so_out;
  solve_cmd->add_option("--instance", so_instance, "Problem instance JSON")->required();
  solve_cmd->add_option("-o,--out", so_out, "Output solution JSON")->required();

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Brute-force reference solver (max 22 add-ons)");
  std::string or_instance, or_out;
  oracle_cmd->add_option("--instance", or_instance, "Problem instance JSON")->required();
  oracle_cmd->add_option("-o,--out", or_out, "Output solution JSON")->required();

  // allocate
  auto* allocate_cmd =
      app.add_subcommand("allocate", "map + encode + solve in one step");
  std::string al_topology, al_demand, al_request, al_out;
  allocate_cmd->add_option("--topology", al_topology, "Topology JSON")->required();
  allocate_cmd->add_option("--demand", al_demand, "Demand JSON")->required();
  allocate_cmd->add_option("--request", al_request, "Request JSON")->required();
  allocate_cmd->add_option("-o,--out", al_out, "Output solution JSON")->required();

  // validate
  auto* validate_cmd =
      app.add_subcommand("validate", "Check a solution against the domain constraints");
  std::string va_topology, va_demand, va_request, va_solution;
  validate_cmd->add_option("--topology", va_topology, "Topology JSON")->required();
  validate_cmd->add_option("--demand", va_demand, "Demand JSON")->required();
  validate_cmd->add_option("--request", va_request, "Request JSON")->required();
  validate_cmd->add_option("--solution", va_solution, "Solution JSON")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  std::string be_suite, be_dataset, be_out;
  bench_cmd->add_option("--suite", be_suite, "Suite spec YAML")->required();
  bench_cmd->add_option("--dataset", be_dataset, "Site CSV")->required();
  bench_cmd->add_option("--out", be_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << app.help();
    return kExitUsage;
  }

  if (gen_topology->parsed()) {
    const DatasetLoadResult data = load_dataset_file(gt_dataset);
    const EnrichmentConfig cfg = enrichment_from_json(load_structured_file(gt_config));
    const std::vector<Node> nodes = enrich(data.sites, cfg);
    std::vector<BusinessRule> rules;
    if (!gt_rules.empty()) rules = rules_from_json(load_structured_file(gt_rules));
    const std::optional<std::int64_t> cap =
        gt_max_nodes >= 0 ? std::optional<std::int64_t>(gt_max_nodes) : std::nullopt;
    const Topology topo =
        sample_topology(nodes, parse_center(gt_center), gt_radius, cap, rules, gt_seed);
    save_structured_file(gt_out, topology_to_json(topo));
    std::cout << "topology with " << topo.nodes.size() << " nodes written to " << gt_out
              << "\n";
    return kExitOk;
  }

  if (gen_demand_cmd->parsed()) {
    const AppProfile profile = resolve_profile(gd_profile);
    const Zone zone = zone_from_json(load_structured_file(gd_zone), "");
    if (gd_users < 0) throw Error("--users must be non-negative");
    DemandFile out;
    out.demand = generate_demand(gd_users, profile, zone, gd_seed);
    out.profile_id = profile.profile_id;
    out.seed = gd_seed;
    save_structured_file(gd_out, demand_to_json(out));
    std::cout << "demand written to " << gd_out << "\n";
    return kExitOk;
  }

  if (map_cmd->parsed()) {
    const Topology topo = topology_from_json(load_structured_file(map_topology_path));
    save_structured_file(map_out, pricing_to_json(map_topology(topo)));
    std::cout << "pricing document written to " << map_out << "\n";
    return kExitOk;
  }

  if (encode_cmd->parsed()) {
    const PricingDocument doc = pricing_from_json(load_structured_file(en_pricing));
    const DemandFile demand = demand_from_json(load_structured_file(en_demand));
    const Request request = request_from_json(load_structured_file(en_request));
    ProblemInstance inst = encode(doc, demand.demand, request);
    inst.provenance = make_provenance(doc, demand, request);
    save_structured_file(en_out, instance_to_json(inst));
    std::cout << "instance with " << inst.pricing.addons.size() << " add-ons written to "
              << en_out << "\n";
    return kExitOk;
  }

  if (solve_cmd->parsed()) {
    const ProblemInstance inst = instance_from_json(load_structured_file(so_instance));
    return emit_solution(solve(inst), so_out);
  }

  if (oracle_cmd->parsed()) {
    const ProblemInstance inst = instance_from_json(load_structured_file(or_instance));
    return emit_solution(brute_force(inst), or_out);
  }

  if (allocate_cmd->parsed()) {
    const Topology topo = topology_from_json(load_structured_file(al_topology));
    const DemandFile demand = demand_from_json(load_structured_file(al_demand));
    const Request request = request_from_json(load_structured_file(al_request));
    const PricingDocument doc = map_topology(topo);
    ProblemInstance inst = encode(doc, demand.demand, request);
    inst.provenance = make_provenance(doc, demand, request);
    return emit_solution(solve(inst), al_out);
  }

  if (validate_cmd->parsed()) {
    const Topology topo = topology_from_json(load_structured_file(va_topology));
    const DemandFile demand = demand_from_json(load_structured_file(va_demand));
    const Request request = request_from_json(load_structured_file(va_request));
    const AllocationSolution sol = solution_from_json(load_structured_file(va_solution));
    const Configuration config = back_project(sol.selection, topo);
    const ValidationReport report = validate(config, topo, demand.demand, request);
    std::cout << canonical_bytes(report_to_json(report));
    return report.feasible ? kExitOk : kExitInfeasible;
  }

  if (bench_cmd->parsed()) {
    const SuiteSpec spec = suite_from_json(load_structured_file(be_suite));
    const DatasetLoadResult data = load_dataset_file(be_dataset);
    const std::vector<Node> nodes = enrich(data.sites, spec.enrichment);
    std::filesystem::create_directories(be_out);
    const std::string manifest = be_out + "/manifest.json";
    const auto progress = [](const ScenarioType& type, std::int64_t k,
                             const InstanceOutcome& outcome) {
      log_info("scenario " + type.app + "/" + type.scale + "/" +
               std::string(sweep_name(type.sweep)) + "/" + std::to_string(type.level) +
               " instance " + std::to_string(k) + ": " +
               std::string(solve_status_name(outcome.status)));
    };
    const std::vector<BenchResult> results = run_suite(spec, nodes, manifest, progress);
    write_file(be_out + "/results.csv", results_csv(results));
    save_structured_file(be_out + "/results.json", results_to_json(results));
    std::int64_t optimal = 0, infeasible = 0, skipped = 0;
    for (const auto& r : results) {
      optimal += r.n_optimal;
      infeasible += r.n_infeasible;
      skipped += r.skipped ? 1 : 0;
    }
    std::cout << results.size() << " scenario types, " << optimal << " optimal, "
              << infeasible << " infeasible, " << skipped << " skipped; results in "
              << be_out << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const continuum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  }
}
