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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "continuum/types.hpp"

namespace continuum {

/// Symbolic price expression over numeric literals, requested_<dim>
/// variables, + and *.
class PriceExpression {
 public:
  enum class Kind { literal, variable, add, mul };

  struct ExprNode {
    Kind kind;
    Fixed4 value;                          // literal
    Dim dim = Dim::ram;                    // variable
    std::shared_ptr<const ExprNode> lhs;   // add/mul
    std::shared_ptr<const ExprNode> rhs;
  };

  PriceExpression() = default;
  explicit PriceExpression(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}

  static PriceExpression literal(Fixed4 v);
  static PriceExpression variable(Dim d);
  static PriceExpression add(PriceExpression l, PriceExpression r);
  static PriceExpression mul(PriceExpression l, PriceExpression r);

  const ExprNode* root() const { return root_.get(); }
  bool empty() const { return root_ == nullptr; }

 private:
  std::shared_ptr<const ExprNode> root_;
};

/// Grammar: expr := term ('+' term)* ; term := factor ('*' factor)* ;
/// factor := number | requested_<dim> | '(' expr ')'. Whitespace ignored.
/// Throws ParseError with the offending position.
PriceExpression parse_price_expression(std::string_view text);

/// Canonical rendering: single spaces around operators, minimal literals,
/// parentheses only where the tree requires them.
std::string print_price_expression(const PriceExpression& e);

/// Exact fixed-point evaluation; every product rounds half-up at 4 decimals.
Money eval_price_expression(const PriceExpression& e, const ResourceVector& bindings);

/// Structural equality of expression trees.
bool expr_equal(const PriceExpression& a, const PriceExpression& b);

enum class LimitAggregation { summed, per_addon };

/// A measurable dimension of the pricing: the five resources (summed over
/// the subscription) and distance (checked per add-on).
struct UsageLimit {
  std::string name;
  LimitAggregation aggregation = LimitAggregation::summed;
};

/// The fixed usage-limit set every mapped document carries.
std::vector<UsageLimit> standard_usage_limits();

/// One selectable pricing element: an operational mode of one node.
struct AddOn {
  std::string addon_id;                 // "<node_id>#<mode_id>"
  std::string feature;                  // node-type feature name
  std::string provider;
  GeoPoint location;                    // carried for distance instantiation
  ResourceVector extensions;            // usage-limit extensions
  Fixed4 distance_m;                    // meters; set when instantiated
  std::variant<PriceExpression, Money> price;
  std::set<std::string> excludes;

  bool symbolic_price() const { return std::holds_alternative<PriceExpression>(price); }
  const PriceExpression& price_expression() const { return std::get<PriceExpression>(price); }
  Money resolved_price() const { return std::get<Money>(price); }
};

enum class DocState { symbolic, instantiated };

/// Pricing-domain projection of a topology: features, usage limits and
/// one add-on per (node, mode).
struct PricingDocument {
  std::string currency = "USD";
  std::set<std::string> features;
  std::vector<UsageLimit> usage_limits;
  std::vector<AddOn> addons;
  DocState state = DocState::symbolic;

  const AddOn* find_addon(std::string_view id) const {
    for (const auto& a : addons) {
      if (a.addon_id == id) return &a;
    }
    return nullptr;
  }
};

/// Constraint set restricting valid selections.
struct Filter {
  ResourceVector min_usage;
  std::optional<Money> max_price;   // nullopt = unbounded
  std::int64_t max_cardinality = 1;
  Fixed4 max_distance_m;
  std::set<std::string> allowed_features;
  std::set<std::string> allowed_providers;
};

/// Sorts add-ons and exclusion sets, symmetrizes exclusions, and checks id
/// uniqueness. Throws SchemaError on duplicate ids or dangling exclusion
/// targets.
void normalize_document(PricingDocument& doc);

/// node_id part of an add-on id (text before the '#', or the whole id).
std::string addon_node_part(std::string_view addon_id);

}  // namespace continuum
