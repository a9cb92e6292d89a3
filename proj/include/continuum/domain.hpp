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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "continuum/types.hpp"

namespace continuum {

enum class NodeType { CAMERA, SENSOR, NETWORK_NODE, DATA_CENTER, COMPUTER };
enum class Tier { edge, fog, cloud };

std::string_view node_type_name(NodeType t);
std::optional<NodeType> node_type_from_name(std::string_view name);
std::string_view tier_name(Tier t);
std::optional<Tier> tier_from_name(std::string_view name);

/// Where a node sits and who rents it out.
struct ContextDescriptor {
  GeoPoint location;
  std::string provider;
  Money base_price;  // fixed monthly rental component, defaults to 0
};

/// Alternative resource/price profile of one physical node; at most one
/// mode of a node can be active in a configuration.
struct OperationalMode {
  std::string mode_id;
  ResourceVector capacity;
  ResourceVector unit_prices;          // money per unit per month
  std::optional<Money> base_price;     // overrides the node-level base price
};

struct Node {
  std::string node_id;
  NodeType node_type = NodeType::COMPUTER;
  Tier tier = Tier::edge;
  ContextDescriptor context;
  std::vector<OperationalMode> modes;

  const OperationalMode* find_mode(std::string_view mode_id) const {
    for (const auto& m : modes) {
      if (m.mode_id == mode_id) return &m;
    }
    return nullptr;
  }

  Money effective_base_price(const OperationalMode& mode) const {
    return mode.base_price ? *mode.base_price : context.base_price;
  }
};

enum class RuleKind { provider_exclusion, node_exclusion };

/// Symmetric mutual-exclusion rule over providers or nodes.
struct BusinessRule {
  RuleKind kind = RuleKind::provider_exclusion;
  std::string a;
  std::string b;
};

/// The offer: candidate nodes plus the business rules governing their
/// joint use.
struct Topology {
  std::vector<Node> nodes;
  std::vector<BusinessRule> rules;
  std::string currency = "USD";

  const Node* find_node(std::string_view node_id) const {
    for (const auto& n : nodes) {
      if (n.node_id == node_id) return &n;
    }
    return nullptr;
  }
};

/// Aggregate resource requirement induced by users in a zone.
struct Demand {
  ResourceVector vector;
  Zone zone;
  std::int64_t user_count = 0;
};

/// Orthogonal selection constraints.
struct Request {
  std::int64_t max_nodes = 1;
  Fixed4 max_distance_m;                 // meters, quantized at 4 decimals
  std::optional<Money> max_price;        // nullopt = unbounded
  std::set<std::string> allowed_providers;
  std::set<NodeType> allowed_node_types;

  /// Permissive request covering every provider/type in t.
  static Request unconstrained(const Topology& t);
};

/// A selected set of (node, mode) pairs; at most one mode per node.
struct Configuration {
  std::vector<std::pair<std::string, std::string>> selections;  // (node_id, mode_id)

  bool contains_node(std::string_view node_id) const {
    for (const auto& [n, m] : selections) {
      if (n == node_id) return true;
    }
    return false;
  }
};

enum class ViolationKind {
  demand_shortfall,
  cardinality,
  budget,
  provider,
  distance,
  node_type,
  exclusion,
};

struct Violation {
  ViolationKind kind;
  std::string a;       // node id / provider / dimension name, by kind
  std::string b;       // second party for exclusions
  Fixed4 amount;       // shortfall amount for demand_shortfall

  std::string describe() const;
};

struct ValidationReport {
  bool feasible = false;
  std::vector<Violation> violations;
};

/// Component-wise dominance: a_i >= b_i for every dimension.
bool dominates(const ResourceVector& a, const ResourceVector& b);

/// Sum over selected modes of capacity capped per dimension at the demand:
/// sum_i min(capacity_i, demand_i). Throws LookupError on unknown ids.
ResourceVector aggregate_capacity(const Configuration& config, const Topology& topology,
                                  const Demand& demand);

/// Monthly price of one selected mode under a demand: per-dimension
/// min(capacity, demand) * unit price, summed, plus the effective base
/// price. The infrastructure-side counterpart of the evaluated pricing
/// expression.
Money evaluated_mode_price(const Node& node, const OperationalMode& mode,
                           const ResourceVector& demand);

/// Checks a configuration against demand dominance, the request bounds and
/// the business rules, independently of the solver. Reports every
/// violation, not just the first.
ValidationReport validate(const Configuration& config, const Topology& topology,
                          const Demand& demand, const Request& request);

}  // namespace continuum
