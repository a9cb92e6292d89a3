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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "continuum/domain.hpp"

namespace continuum {

/// One dataset row: a named site with coordinates.
struct RawSite {
  std::string name;
  GeoPoint location;
};

struct DatasetLoadResult {
  std::vector<RawSite> sites;
  std::vector<std::string> warnings;  // skipped rows with reasons
};

/// Capacity range [min, max] per dimension.
struct CapacityRange {
  ResourceVector min;
  ResourceVector max;
};

/// Controls the synthetic enrichment of raw sites into nodes.
/// The shipped configuration (configs/enrichment_default.yaml) carries
/// artifact defaults, not values from any external source.
struct EnrichmentConfig {
  std::map<Tier, double> tier_probabilities;
  std::map<Tier, CapacityRange> capacity_ranges;
  // (tier, provider or "default") -> per-unit monthly prices.
  std::map<std::pair<Tier, std::string>, ResourceVector> unit_prices;
  std::map<Tier, std::map<NodeType, double>> node_type_probabilities;
  std::uint64_t seed = 0;
};

/// Throws SchemaError when probabilities do not sum to 1 (+-1e-9), a range
/// has min > max, or a distribution is empty.
void validate_enrichment_config(const EnrichmentConfig& cfg);

/// CSV with header "name,latitude,longitude,elevation". Invalid rows are
/// skipped and reported as warnings, not errors.
DatasetLoadResult load_dataset(std::istream& in);
DatasetLoadResult load_dataset_file(const std::string& path);

/// Case-insensitive substring match against the canonical provider list;
/// the first match in canonical order wins.
std::optional<std::string> infer_provider(std::string_view name);

/// The canonical provider names, in match-priority order.
const std::vector<std::string>& canonical_providers();

/// Drops provider-less sites; draws tier, node type and capacities for the
/// rest. All draws are keyed by (seed, site index, field tag), so one
/// site's enrichment never depends on the other sites present.
std::vector<Node> enrich(const std::vector<RawSite>& sites, const EnrichmentConfig& cfg);

/// Keeps nodes within radius_m of center (3-D ECEF distance), caps the
/// count by a seeded uniform subset when requested, and attaches rules.
Topology sample_topology(const std::vector<Node>& nodes, const GeoPoint& center,
                         double radius_m, std::optional<std::int64_t> max_nodes,
                         const std::vector<BusinessRule>& rules, std::uint64_t seed);

}  // namespace continuum
