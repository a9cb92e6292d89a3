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

#include "continuum/topogen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "continuum/error.hpp"
#include "continuum/geo.hpp"
#include "continuum/log.hpp"
#include "continuum/rng.hpp"

namespace continuum {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(s, &used);
    return used == s.size() && std::isfinite(out);
  } catch (const std::exception&) {
    return false;
  }
}

// Draws a key from an accumulated probability table with one uniform.
template <typename K>
K draw_from_distribution(const std::map<K, double>& dist, double u) {
  double acc = 0.0;
  K last{};
  for (const auto& [k, p] : dist) {
    acc += p;
    last = k;
    if (u < acc) return k;
  }
  return last;
}

}  // namespace

void validate_enrichment_config(const EnrichmentConfig& cfg) {
  double sum = 0.0;
  for (const auto& [t, p] : cfg.tier_probabilities) {
    if (p < 0) throw SchemaError("/tier_probabilities: negative probability");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw SchemaError("/tier_probabilities: probabilities sum to " + std::to_string(sum) +
                      ", expected 1");
  }
  for (const auto& [t, range] : cfg.capacity_ranges) {
    for (Dim d : kAllDims) {
      if (range.min[d] > range.max[d]) {
        throw SchemaError("/capacity_ranges/" + std::string(tier_name(t)) + "/" +
                          std::string(dim_field_name(d)) + ": min exceeds max");
      }
      if (range.min[d].is_negative()) {
        throw SchemaError("/capacity_ranges/" + std::string(tier_name(t)) + "/" +
                          std::string(dim_field_name(d)) + ": negative minimum");
      }
    }
  }
  for (const auto& [t, dist] : cfg.node_type_probabilities) {
    double s = 0.0;
    for (const auto& [ty, p] : dist) {
      if (p < 0) throw SchemaError("/node_type_probabilities: negative probability");
      s += p;
    }
    if (std::fabs(s - 1.0) > 1e-9) {
      throw SchemaError("/node_type_probabilities/" + std::string(tier_name(t)) +
                        ": probabilities sum to " + std::to_string(s) + ", expected 1");
    }
  }
}

DatasetLoadResult load_dataset(std::istream& in) {
  DatasetLoadResult result;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("dataset is empty, expected a header row");
  if (trim(lower(line)) != "name,latitude,longitude,elevation") {
    throw ParseError("dataset header must be 'name,latitude,longitude,elevation'");
  }
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 4) {
      result.warnings.push_back("row " + std::to_string(row) + ": expected 4 fields, got " +
                                std::to_string(fields.size()));
      continue;
    }
    double lat = 0, lon = 0, elev = 0;
    if (!parse_double(fields[1], lat) || !parse_double(fields[2], lon) ||
        !parse_double(fields[3], elev)) {
      result.warnings.push_back("row " + std::to_string(row) + ": non-numeric coordinate");
      continue;
    }
    const GeoPoint p{lat, lon, elev};
    if (!geo_point_valid(p)) {
      result.warnings.push_back("row " + std::to_string(row) + ": coordinates out of range");
      continue;
    }
    result.sites.push_back({fields[0], p});
  }
  return result;
}

DatasetLoadResult load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dataset file '" + path + "'");
  DatasetLoadResult result = load_dataset(in);
  for (const auto& w : result.warnings) log_warn("dataset " + path + ": " + w);
  return result;
}

const std::vector<std::string>& canonical_providers() {
  static const std::vector<std::string> providers = {"OPTUS", "TELSTRA", "VODAFONE",
                                                     "MACQUARIE", "TELECOM"};
  return providers;
}

std::optional<std::string> infer_provider(std::string_view name) {
  const std::string haystack = lower(name);
  for (const auto& provider : canonical_providers()) {
    if (haystack.find(lower(provider)) != std::string::npos) return provider;
  }
  return std::nullopt;
}

std::vector<Node> enrich(const std::vector<RawSite>& sites, const EnrichmentConfig& cfg) {
  validate_enrichment_config(cfg);
  std::vector<Node> nodes;
  nodes.reserve(sites.size());
  for (std::size_t index = 0; index < sites.size(); ++index) {
    const RawSite& site = sites[index];
    const auto provider = infer_provider(site.name);
    if (!provider) continue;

    Node node;
    char id[24];
    std::snprintf(id, sizeof(id), "n%06zu", index);
    node.node_id = id;
    node.context.location = site.location;
    node.context.provider = *provider;
    node.context.base_price = Money{};

    Rng tier_rng(derive_seed(cfg.seed, {index, tag64("tier")}));
    node.tier = draw_from_distribution(cfg.tier_probabilities, tier_rng.next_unit());

    const auto type_dist = cfg.node_type_probabilities.find(node.tier);
    if (type_dist == cfg.node_type_probabilities.end() || type_dist->second.empty()) {
      throw SchemaError("/node_type_probabilities: missing distribution for tier " +
                        std::string(tier_name(node.tier)));
    }
    Rng type_rng(derive_seed(cfg.seed, {index, tag64("node_type")}));
    node.node_type = draw_from_distribution(type_dist->second, type_rng.next_unit());

    const auto range_it = cfg.capacity_ranges.find(node.tier);
    if (range_it == cfg.capacity_ranges.end()) {
      throw SchemaError("/capacity_ranges: missing range for tier " +
                        std::string(tier_name(node.tier)));
    }
    OperationalMode mode;
    mode.mode_id = "default";
    for (Dim d : kAllDims) {
      // Uniform over the quantized grid, so every draw lies in [min, max].
      Rng dim_rng(derive_seed(cfg.seed, {index, tag64("capacity"), tag64(dim_field_name(d))}));
      const std::int64_t lo = range_it->second.min[d].units();
      const std::int64_t hi = range_it->second.max[d].units();
      mode.capacity[d] = Fixed4::from_units(dim_rng.uniform_int(lo, hi));
    }

    auto price_it = cfg.unit_prices.find({node.tier, *provider});
    if (price_it == cfg.unit_prices.end()) {
      price_it = cfg.unit_prices.find({node.tier, "default"});
    }
    if (price_it == cfg.unit_prices.end()) {
      throw SchemaError("/unit_prices: no entry for tier " + std::string(tier_name(node.tier)) +
                        " and provider " + *provider + " (and no default)");
    }
    mode.unit_prices = price_it->second;
    node.modes.push_back(std::move(mode));
    nodes.push_back(std::move(node));
  }
  return nodes;
}

Topology sample_topology(const std::vector<Node>& nodes, const GeoPoint& center,
                         double radius_m, std::optional<std::int64_t> max_nodes,
                         const std::vector<BusinessRule>& rules, std::uint64_t seed) {
  Topology topo;
  topo.rules = rules;
  std::vector<Node> in_radius;
  for (const Node& n : nodes) {
    if (ecef_distance_m(n.context.location, center) <= radius_m) in_radius.push_back(n);
  }
  if (max_nodes && static_cast<std::int64_t>(in_radius.size()) > *max_nodes) {
    // Seeded partial Fisher-Yates: first max_nodes entries are the sample.
    Rng rng(derive_seed(seed, {tag64("sample_topology")}));
    const std::size_t want = static_cast<std::size_t>(*max_nodes);
    for (std::size_t i = 0; i < want; ++i) {
      const std::size_t j = static_cast<std::size_t>(
          rng.uniform_int(static_cast<std::int64_t>(i),
                          static_cast<std::int64_t>(in_radius.size()) - 1));
      std::swap(in_radius[i], in_radius[j]);
    }
    in_radius.resize(want);
    std::sort(in_radius.begin(), in_radius.end(),
              [](const Node& a, const Node& b) { return a.node_id < b.node_id; });
  }
  topo.nodes = std::move(in_radius);
  return topo;
}

}  // namespace continuum
