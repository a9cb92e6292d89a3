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

#include "continuum/mapping.hpp"

#include <map>
#include <vector>

#include "continuum/error.hpp"
#include "continuum/geo.hpp"

namespace continuum {

namespace {

std::string addon_id_for(const Node& node, const OperationalMode& mode) {
  return node.node_id + "#" + mode.mode_id;
}

PriceExpression symbolic_price(const Node& node, const OperationalMode& mode) {
  PriceExpression expr;
  for (Dim d : kAllDims) {
    const Fixed4 unit = mode.unit_prices[d];
    if (unit.is_zero()) continue;
    auto term = PriceExpression::mul(PriceExpression::variable(d),
                                     PriceExpression::literal(unit));
    expr = expr.empty() ? std::move(term) : PriceExpression::add(std::move(expr), std::move(term));
  }
  const Money base = node.effective_base_price(mode);
  if (!base.is_zero()) {
    auto constant = PriceExpression::literal(base);
    expr = expr.empty() ? std::move(constant)
                        : PriceExpression::add(std::move(expr), std::move(constant));
  }
  if (expr.empty()) expr = PriceExpression::literal(Fixed4{});
  return expr;
}

}  // namespace

PricingDocument map_topology(const Topology& t) {
  PricingDocument doc;
  doc.currency = t.currency;
  doc.usage_limits = standard_usage_limits();
  doc.state = DocState::symbolic;

  std::map<std::string, std::vector<std::string>> addons_by_provider;
  std::map<std::string, std::vector<std::string>> addons_by_node;

  for (const Node& node : t.nodes) {
    doc.features.insert(std::string(node_type_name(node.node_type)));
    for (const OperationalMode& mode : node.modes) {
      AddOn addon;
      addon.addon_id = addon_id_for(node, mode);
      addon.feature = node_type_name(node.node_type);
      addon.provider = node.context.provider;
      addon.location = node.context.location;
      addon.extensions = mode.capacity;
      addon.distance_m = Fixed4{};
      addon.price = symbolic_price(node, mode);
      addons_by_provider[node.context.provider].push_back(addon.addon_id);
      addons_by_node[node.node_id].push_back(addon.addon_id);
      doc.addons.push_back(std::move(addon));
    }
  }

  std::map<std::string, std::set<std::string>> excludes;
  const auto exclude_pairwise = [&excludes](const std::vector<std::string>& left,
                                            const std::vector<std::string>& right) {
    for (const auto& a : left) {
      for (const auto& b : right) {
        if (a == b) continue;
        excludes[a].insert(b);
        excludes[b].insert(a);
      }
    }
  };

  // Sibling modes of one node mutually exclude each other.
  for (const auto& [node_id, ids] : addons_by_node) {
    exclude_pairwise(ids, ids);
  }

  for (const BusinessRule& rule : t.rules) {
    if (rule.kind == RuleKind::provider_exclusion) {
      const auto ia = addons_by_provider.find(rule.a);
      const auto ib = addons_by_provider.find(rule.b);
      if (ia != addons_by_provider.end() && ib != addons_by_provider.end()) {
        exclude_pairwise(ia->second, ib->second);
      }
    } else {
      const auto ia = addons_by_node.find(rule.a);
      const auto ib = addons_by_node.find(rule.b);
      if (ia != addons_by_node.end() && ib != addons_by_node.end()) {
        exclude_pairwise(ia->second, ib->second);
      }
    }
  }

  for (auto& addon : doc.addons) addon.excludes = excludes[addon.addon_id];
  normalize_document(doc);
  return doc;
}

ProblemInstance encode(const PricingDocument& p, const Demand& d, const Request& r) {
  if (p.state != DocState::symbolic) {
    throw Error("encode requires a symbolic pricing document");
  }
  ProblemInstance inst;
  inst.pricing = p;
  inst.pricing.state = DocState::instantiated;

  for (AddOn& addon : inst.pricing.addons) {
    addon.distance_m = Fixed4::from_double(zone_max_distance_m(addon.location, d.zone));
    addon.extensions = component_min(addon.extensions, d.vector);
    if (addon.symbolic_price()) {
      addon.price = eval_price_expression(addon.price_expression(), addon.extensions);
    }
  }

  inst.filter.min_usage = d.vector;
  inst.filter.max_price = r.max_price;
  inst.filter.max_cardinality = r.max_nodes;
  inst.filter.max_distance_m = r.max_distance_m;
  for (NodeType t : r.allowed_node_types) {
    inst.filter.allowed_features.insert(std::string(node_type_name(t)));
  }
  inst.filter.allowed_providers = r.allowed_providers;

  validate_instance(inst);
  return inst;
}

Configuration back_project(const std::set<std::string>& selection, const Topology& t) {
  Configuration config;
  for (const std::string& addon_id : selection) {
    const auto hash = addon_id.find('#');
    if (hash == std::string::npos) {
      throw LookupError("add-on id '" + addon_id + "' is not of the form node#mode");
    }
    const std::string node_id = addon_id.substr(0, hash);
    const std::string mode_id = addon_id.substr(hash + 1);
    const Node* node = t.find_node(node_id);
    if (!node) throw LookupError("unknown node '" + node_id + "'");
    if (!node->find_mode(mode_id)) {
      throw LookupError("unknown mode '" + mode_id + "' on node '" + node_id + "'");
    }
    if (config.contains_node(node_id)) {
      throw LookupError("two modes of node '" + node_id + "' selected");
    }
    config.selections.emplace_back(node_id, mode_id);
  }
  return config;
}

void validate_instance(const ProblemInstance& inst) {
  if (inst.pricing.state != DocState::instantiated) {
    throw SchemaError("/pricing/state: expected 'instantiated'");
  }
  for (std::size_t i = 0; i < inst.pricing.addons.size(); ++i) {
    const AddOn& a = inst.pricing.addons[i];
    if (a.symbolic_price()) {
      throw SchemaError("/pricing/addons/" + std::to_string(i) +
                        "/price: unresolved symbolic price in instantiated document");
    }
    for (Dim d : kAllDims) {
      if (a.extensions[d] > inst.filter.min_usage[d]) {
        throw SchemaError("/pricing/addons/" + std::to_string(i) + "/extensions/" +
                          std::string(dim_field_name(d)) +
                          ": extension exceeds demand minimum usage");
      }
    }
  }
}

}  // namespace continuum
