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

#include <json.hpp>

#include "continuum/bench.hpp"
#include "continuum/demandgen.hpp"
#include "continuum/domain.hpp"
#include "continuum/mapping.hpp"
#include "continuum/pricing.hpp"
#include "continuum/solver.hpp"
#include "continuum/topogen.hpp"

namespace continuum {

// nlohmann::json keeps object keys sorted, which the canonical forms rely on.
using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Primitives
// ---------------------------------------------------------------------------

/// Canonical bytes: 2-space indented dump with sorted keys, trailing newline.
std::string canonical_bytes(const Json& j);

/// 16-hex-digit FNV-1a digest, used for provenance.
std::string fnv1a_hex(std::string_view bytes);

/// Decimal values are serialized as strings so that JSON and YAML render
/// them identically; this wraps a double in its shortest round-trip form.
Json json_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);
bool file_exists(const std::string& path);

/// Parses .json / .yaml / .yml by extension; YAML is bridged to JSON with
/// non-integer scalars kept as strings.
Json load_structured_file(const std::string& path);

/// Writes canonical JSON or YAML by extension.
void save_structured_file(const std::string& path, const Json& j);

// Typed field access with JSON-pointer-style error paths.
const Json& require_key(const Json& j, const std::string& key, const std::string& path);
std::string get_string(const Json& j, const std::string& path);
std::int64_t get_int(const Json& j, const std::string& path);
std::uint64_t get_uint64(const Json& j, const std::string& path);
double get_double(const Json& j, const std::string& path);
Fixed4 get_fixed4(const Json& j, const std::string& path);

// ---------------------------------------------------------------------------
// Domain documents
// ---------------------------------------------------------------------------

Json resource_vector_to_json(const ResourceVector& v);
ResourceVector resource_vector_from_json(const Json& j, const std::string& path,
                                         bool require_all_dims = false);

Json topology_to_json(const Topology& t);
Topology topology_from_json(const Json& j);

Json zone_to_json(const Zone& z);
Zone zone_from_json(const Json& j, const std::string& path);

std::vector<BusinessRule> rules_from_json(const Json& j);

/// On-disk demand document; profile id and seed record how it was made.
struct DemandFile {
  Demand demand;
  std::string profile_id;
  std::uint64_t seed = 0;
};

Json demand_to_json(const DemandFile& d);
DemandFile demand_from_json(const Json& j);

Json request_to_json(const Request& r);
Request request_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Pricing documents and instances
// ---------------------------------------------------------------------------

Json pricing_to_json(const PricingDocument& doc);
PricingDocument pricing_from_json(const Json& j);

Json filter_to_json(const Filter& f);
Filter filter_from_json(const Json& j);

Json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const Json& j);

Json solution_to_json(const AllocationSolution& sol);
AllocationSolution solution_from_json(const Json& j);

Json report_to_json(const ValidationReport& report);

/// Serialize-parse-reserialize; returns the reparsed document and checks the
/// canonical bytes are a fixed point. Throws SchemaError on any mismatch.
PricingDocument roundtrip_document(const PricingDocument& doc);

// ---------------------------------------------------------------------------
// Generator and suite configuration
// ---------------------------------------------------------------------------

EnrichmentConfig enrichment_from_json(const Json& j);

AppProfile profile_from_json(const Json& j);
Json profile_to_json(const AppProfile& p);

SuiteSpec suite_from_json(const Json& j);

Json results_to_json(const std::vector<BenchResult>& results);

}  // namespace continuum
