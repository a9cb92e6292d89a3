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

#include "continuum/pricing.hpp"

#include <algorithm>
#include <cctype>

#include "continuum/error.hpp"

namespace continuum {

using ExprNode = PriceExpression::ExprNode;
using Kind = PriceExpression::Kind;

PriceExpression PriceExpression::literal(Fixed4 v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::literal;
  n->value = v;
  return PriceExpression(n);
}

PriceExpression PriceExpression::variable(Dim d) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::variable;
  n->dim = d;
  return PriceExpression(n);
}

PriceExpression PriceExpression::add(PriceExpression l, PriceExpression r) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::add;
  n->lhs = l.root_;
  n->rhs = r.root_;
  return PriceExpression(n);
}

PriceExpression PriceExpression::mul(PriceExpression l, PriceExpression r) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::mul;
  n->lhs = l.root_;
  n->rhs = r.root_;
  return PriceExpression(n);
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("price expression syntax error at position " + std::to_string(pos) +
                     ": " + what);
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  PriceExpression parse_expr() {
    PriceExpression left = parse_term();
    while (consume('+')) {
      left = PriceExpression::add(std::move(left), parse_term());
    }
    return left;
  }

  PriceExpression parse_term() {
    PriceExpression left = parse_factor();
    while (consume('*')) {
      left = PriceExpression::mul(std::move(left), parse_factor());
    }
    return left;
  }

  PriceExpression parse_factor() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      PriceExpression inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  PriceExpression parse_number() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail("digits required after decimal point");
      }
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    return PriceExpression::literal(Fixed4::from_string(text.substr(start, pos - start)));
  }

  PriceExpression parse_variable() {
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    const std::string_view name = text.substr(start, pos - start);
    constexpr std::string_view prefix = "requested_";
    if (name.substr(0, prefix.size()) == prefix) {
      const std::string_view dim_name = name.substr(prefix.size());
      for (Dim d : kAllDims) {
        if (dim_name == dim_short_name(d)) return PriceExpression::variable(d);
      }
    }
    pos = start;
    throw ParseError("unknown variable '" + std::string(name) + "' at position " +
                     std::to_string(start));
  }
};

void print_node(const ExprNode* n, std::string& out) {
  switch (n->kind) {
    case Kind::literal:
      out += n->value.str_minimal();
      return;
    case Kind::variable:
      out += "requested_";
      out += dim_short_name(n->dim);
      return;
    case Kind::add:
      print_node(n->lhs.get(), out);
      out += " + ";
      // Right-nested sums need parentheses so reparsing rebuilds the
      // same tree (the parser associates to the left).
      if (n->rhs->kind == Kind::add) {
        out += "(";
        print_node(n->rhs.get(), out);
        out += ")";
      } else {
        print_node(n->rhs.get(), out);
      }
      return;
    case Kind::mul: {
      if (n->lhs->kind == Kind::add) {
        out += "(";
        print_node(n->lhs.get(), out);
        out += ")";
      } else {
        print_node(n->lhs.get(), out);
      }
      out += " * ";
      if (n->rhs->kind == Kind::add || n->rhs->kind == Kind::mul) {
        out += "(";
        print_node(n->rhs.get(), out);
        out += ")";
      } else {
        print_node(n->rhs.get(), out);
      }
      return;
    }
  }
}

Money eval_node(const ExprNode* n, const ResourceVector& bindings) {
  switch (n->kind) {
    case Kind::literal: return n->value;
    case Kind::variable: return bindings[n->dim];
    case Kind::add: return eval_node(n->lhs.get(), bindings) + eval_node(n->rhs.get(), bindings);
    case Kind::mul:
      return fixed_mul(eval_node(n->lhs.get(), bindings), eval_node(n->rhs.get(), bindings));
  }
  return {};
}

bool node_equal(const ExprNode* a, const ExprNode* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::literal: return a->value == b->value;
    case Kind::variable: return a->dim == b->dim;
    default:
      return node_equal(a->lhs.get(), b->lhs.get()) && node_equal(a->rhs.get(), b->rhs.get());
  }
}

}  // namespace

PriceExpression parse_price_expression(std::string_view text) {
  Parser parser{text};
  PriceExpression e = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return e;
}

std::string print_price_expression(const PriceExpression& e) {
  if (e.empty()) return "0";
  std::string out;
  print_node(e.root(), out);
  return out;
}

Money eval_price_expression(const PriceExpression& e, const ResourceVector& bindings) {
  if (e.empty()) return {};
  return eval_node(e.root(), bindings);
}

bool expr_equal(const PriceExpression& a, const PriceExpression& b) {
  return node_equal(a.root(), b.root());
}

std::vector<UsageLimit> standard_usage_limits() {
  std::vector<UsageLimit> limits;
  for (Dim d : kAllDims) {
    limits.push_back({std::string(dim_field_name(d)), LimitAggregation::summed});
  }
  limits.push_back({"distance_m", LimitAggregation::per_addon});
  return limits;
}

std::string addon_node_part(std::string_view addon_id) {
  const auto hash = addon_id.find('#');
  return std::string(hash == std::string_view::npos ? addon_id : addon_id.substr(0, hash));
}

void normalize_document(PricingDocument& doc) {
  std::sort(doc.addons.begin(), doc.addons.end(),
            [](const AddOn& a, const AddOn& b) { return a.addon_id < b.addon_id; });
  std::set<std::string> ids;
  for (const auto& a : doc.addons) {
    if (!ids.insert(a.addon_id).second) {
      throw SchemaError("/addons: duplicate add-on id '" + a.addon_id + "'");
    }
  }
  // Symmetrize exclusions; reject references to unknown add-ons.
  std::map<std::string, std::set<std::string>> excludes;
  for (const auto& a : doc.addons) {
    for (const auto& e : a.excludes) {
      if (!ids.contains(e)) {
        throw SchemaError("/addons/" + a.addon_id + "/excludes: unknown add-on '" + e + "'");
      }
      if (e == a.addon_id) {
        throw SchemaError("/addons/" + a.addon_id + "/excludes: add-on excludes itself");
      }
      excludes[a.addon_id].insert(e);
      excludes[e].insert(a.addon_id);
    }
  }
  for (auto& a : doc.addons) a.excludes = excludes[a.addon_id];
}

}  // namespace continuum
