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

#include <set>
#include <string>

#include "continuum/domain.hpp"
#include "continuum/pricing.hpp"

namespace continuum {

/// Where a problem instance came from: hex digests of the canonical bytes
/// of the encode inputs.
struct Provenance {
  std::string pricing;
  std::string demand;
  std::string request;
};

/// Demand-specialized, filter-constrained pricing: the solver's input.
struct ProblemInstance {
  PricingDocument pricing;  // state = instantiated
  Filter filter;
  Provenance provenance;
};

/// Projects a topology into a symbolic pricing document: one add-on per
/// (node, mode), node types as features, capacities as usage-limit
/// extensions, unit prices as symbolic expressions, business rules as
/// pairwise add-on exclusions. Sibling modes mutually exclude.
PricingDocument map_topology(const Topology& t);

/// Specializes a symbolic document to a demand and request: computes each
/// add-on's zone distance, caps extensions at the demand, evaluates prices,
/// and derives the filter. Throws Error when the document is already
/// instantiated.
ProblemInstance encode(const PricingDocument& p, const Demand& d, const Request& r);

/// Reverses the add-on mapping: addon ids back to (node, mode) pairs.
/// Throws LookupError on unknown ids and on two modes of one node.
Configuration back_project(const std::set<std::string>& selection, const Topology& t);

/// Rejects instances whose extensions exceed min_usage or whose prices are
/// unresolved; message carries a JSON-pointer-style path.
void validate_instance(const ProblemInstance& inst);

}  // namespace continuum
