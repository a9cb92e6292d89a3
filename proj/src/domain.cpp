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

#include "continuum/domain.hpp"

#include <algorithm>

#include "continuum/error.hpp"
#include "continuum/geo.hpp"

namespace continuum {

std::string_view node_type_name(NodeType t) {
  switch (t) {
    case NodeType::CAMERA: return "CAMERA";
    case NodeType::SENSOR: return "SENSOR";
    case NodeType::NETWORK_NODE: return "NETWORK_NODE";
    case NodeType::DATA_CENTER: return "DATA_CENTER";
    case NodeType::COMPUTER: return "COMPUTER";
  }
  return "";
}

std::optional<NodeType> node_type_from_name(std::string_view name) {
  if (name == "CAMERA") return NodeType::CAMERA;
  if (name == "SENSOR") return NodeType::SENSOR;
  if (name == "NETWORK_NODE") return NodeType::NETWORK_NODE;
  if (name == "DATA_CENTER") return NodeType::DATA_CENTER;
  if (name == "COMPUTER") return NodeType::COMPUTER;
  return std::nullopt;
}

std::string_view tier_name(Tier t) {
  switch (t) {
    case Tier::edge: return "edge";
    case Tier::fog: return "fog";
    case Tier::cloud: return "cloud";
  }
  return "";
}

std::optional<Tier> tier_from_name(std::string_view name) {
  if (name == "edge") return Tier::edge;
  if (name == "fog") return Tier::fog;
  if (name == "cloud") return Tier::cloud;
  return std::nullopt;
}

Request Request::unconstrained(const Topology& t) {
  Request r;
  r.max_nodes = static_cast<std::int64_t>(t.nodes.size()) + 1;
  r.max_distance_m = Fixed4::from_int(40'075'000);  // > any distance on the sphere
  r.max_price = std::nullopt;
  for (const auto& n : t.nodes) r.allowed_providers.insert(n.context.provider);
  if (r.allowed_providers.empty()) r.allowed_providers.insert("ANY");
  r.allowed_node_types = {NodeType::CAMERA, NodeType::SENSOR, NodeType::NETWORK_NODE,
                          NodeType::DATA_CENTER, NodeType::COMPUTER};
  return r;
}

std::string Violation::describe() const {
  switch (kind) {
    case ViolationKind::demand_shortfall:
      return "demand_shortfall(" + a + ", " + amount.str_minimal() + ")";
    case ViolationKind::cardinality: return "cardinality";
    case ViolationKind::budget: return "budget";
    case ViolationKind::provider: return "provider(" + a + ")";
    case ViolationKind::distance: return "distance(" + a + ")";
    case ViolationKind::node_type: return "node_type(" + a + ")";
    case ViolationKind::exclusion: return "exclusion(" + a + ", " + b + ")";
  }
  return "";
}

bool dominates(const ResourceVector& a, const ResourceVector& b) {
  for (std::size_t i = 0; i < kDimCount; ++i) {
    if (a.v[i] < b.v[i]) return false;
  }
  return true;
}

namespace {

struct ResolvedSelection {
  const Node* node;
  const OperationalMode* mode;
};

std::vector<ResolvedSelection> resolve(const Configuration& config,
                                       const Topology& topology) {
  std::vector<ResolvedSelection> out;
  out.reserve(config.selections.size());
  for (const auto& [node_id, mode_id] : config.selections) {
    const Node* node = topology.find_node(node_id);
    if (!node) throw LookupError("unknown node '" + node_id + "'");
    const OperationalMode* mode = node->find_mode(mode_id);
    if (!mode) {
      throw LookupError("unknown mode '" + mode_id + "' on node '" + node_id + "'");
    }
    out.push_back({node, mode});
  }
  return out;
}

}  // namespace

ResourceVector aggregate_capacity(const Configuration& config, const Topology& topology,
                                  const Demand& demand) {
  ResourceVector total;
  for (const auto& sel : resolve(config, topology)) {
    total = total + component_min(sel.mode->capacity, demand.vector);
  }
  return total;
}

Money evaluated_mode_price(const Node& node, const OperationalMode& mode,
                           const ResourceVector& demand) {
  Money price = node.effective_base_price(mode);
  for (Dim d : kAllDims) {
    const Fixed4 contributed = fixed_min(mode.capacity[d], demand[d]);
    price += fixed_mul(contributed, mode.unit_prices[d]);
  }
  return price;
}

ValidationReport validate(const Configuration& config, const Topology& topology,
                          const Demand& demand, const Request& request) {
  ValidationReport report;
  const auto selections = resolve(config, topology);

  // Demand dominance over capped capacities.
  const ResourceVector covered = aggregate_capacity(config, topology, demand);
  for (Dim d : kAllDims) {
    if (covered[d] < demand.vector[d]) {
      report.violations.push_back({ViolationKind::demand_shortfall,
                                   std::string(dim_field_name(d)), "",
                                   demand.vector[d] - covered[d]});
    }
  }

  // C1: cardinality over distinct physical nodes.
  std::set<std::string> distinct_nodes;
  for (const auto& sel : selections) distinct_nodes.insert(sel.node->node_id);
  if (static_cast<std::int64_t>(distinct_nodes.size()) > request.max_nodes) {
    report.violations.push_back({ViolationKind::cardinality, "", "", {}});
  }
  if (distinct_nodes.size() != selections.size()) {
    // Two modes of one node selected at once.
    for (std::size_t i = 0; i < selections.size(); ++i) {
      for (std::size_t j = i + 1; j < selections.size(); ++j) {
        if (selections[i].node->node_id == selections[j].node->node_id) {
          report.violations.push_back({ViolationKind::exclusion,
                                       selections[i].node->node_id + "#" +
                                           selections[i].mode->mode_id,
                                       selections[j].node->node_id + "#" +
                                           selections[j].mode->mode_id,
                                       {}});
        }
      }
    }
  }

  // C2: budget.
  if (request.max_price) {
    Money total;
    for (const auto& sel : selections) {
      total += evaluated_mode_price(*sel.node, *sel.mode, demand.vector);
    }
    if (total > *request.max_price) {
      report.violations.push_back({ViolationKind::budget, "", "", {}});
    }
  }

  // C3: providers; node types.
  for (const auto& sel : selections) {
    if (!request.allowed_providers.contains(sel.node->context.provider)) {
      report.violations.push_back(
          {ViolationKind::provider, sel.node->context.provider, "", {}});
    }
    if (!request.allowed_node_types.contains(sel.node->node_type)) {
      report.violations.push_back({ViolationKind::node_type, sel.node->node_id, "", {}});
    }
  }

  // C4: distance to the zone.
  for (const auto& sel : selections) {
    const Fixed4 dist =
        Fixed4::from_double(zone_max_distance_m(sel.node->context.location, demand.zone));
    if (dist > request.max_distance_m) {
      report.violations.push_back({ViolationKind::distance, sel.node->node_id, "", {}});
    }
  }

  // Business rules.
  for (const auto& rule : topology.rules) {
    for (std::size_t i = 0; i < selections.size(); ++i) {
      for (std::size_t j = i + 1; j < selections.size(); ++j) {
        const auto& ni = *selections[i].node;
        const auto& nj = *selections[j].node;
        bool hit = false;
        if (rule.kind == RuleKind::provider_exclusion) {
          hit = (ni.context.provider == rule.a && nj.context.provider == rule.b) ||
                (ni.context.provider == rule.b && nj.context.provider == rule.a);
        } else {
          hit = (ni.node_id == rule.a && nj.node_id == rule.b) ||
                (ni.node_id == rule.b && nj.node_id == rule.a);
        }
        if (hit) {
          report.violations.push_back({ViolationKind::exclusion, rule.a, rule.b, {}});
        }
      }
    }
  }

  report.feasible = report.violations.empty();
  return report;
}

}  // namespace continuum
