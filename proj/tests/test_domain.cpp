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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "continuum/domain.hpp"
#include "continuum/error.hpp"
#include "continuum/rng.hpp"
#include "test_util.hpp"

using namespace continuum;
using test_util::fx;
using test_util::make_demand;
using test_util::make_node;
using test_util::vec;

namespace {

ResourceVector random_vec(Rng& rng) {
  ResourceVector v;
  for (Dim d : kAllDims) v[d] = Fixed4::from_units(rng.uniform_int(0, 100'000));
  return v;
}

// Two-node topology from the worked aggregation example.
Topology example_topology() {
  Topology t;
  t.nodes.push_back(make_node("n1", "TELSTRA", vec(8, 16), vec(0, 0)));
  t.nodes.push_back(make_node("n2", "OPTUS", vec(2, 64), vec(0, 0)));
  return t;
}

Configuration both_nodes() {
  Configuration c;
  c.selections = {{"n1", "default"}, {"n2", "default"}};
  return c;
}

}  // namespace

TEST_CASE("dominance") {
  CHECK(dominates(vec(10, 80), vec(8, 32)));
  const ResourceVector any = vec(3, 1, 4, 1, 5);
  CHECK(dominates(any, any));
  CHECK_FALSE(dominates(vec(7, 100), vec(8, 32)));
}

TEST_CASE("dominance is a partial order") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const ResourceVector a = random_vec(rng);
    const ResourceVector b = random_vec(rng);
    const ResourceVector c = random_vec(rng);
    CHECK(dominates(a, a));
    if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}

TEST_CASE("aggregate capacity caps per dimension at the demand") {
  const Topology t = example_topology();
  const Demand d = make_demand(vec(8, 32));
  const ResourceVector total = aggregate_capacity(both_nodes(), t, d);
  CHECK(total == vec(10, 48));  // n2 storage capped at 32

  Configuration empty;
  CHECK(aggregate_capacity(empty, t, d).is_zero());

  // One node dominating the demand in every dimension caps exactly at it.
  Topology big;
  big.nodes.push_back(make_node("big", "TELSTRA", vec(100, 100, 100, 100, 100), vec(0, 0)));
  Configuration just_big;
  just_big.selections = {{"big", "default"}};
  const Demand d2 = make_demand(vec(5, 7, 1, 2, 3));
  CHECK(aggregate_capacity(just_big, big, d2) == d2.vector);
}

TEST_CASE("aggregate capacity rejects unknown ids") {
  const Topology t = example_topology();
  const Demand d = make_demand(vec(8, 32));
  Configuration bad_node;
  bad_node.selections = {{"nope", "default"}};
  CHECK_THROWS_AS(aggregate_capacity(bad_node, t, d), LookupError);
  Configuration bad_mode;
  bad_mode.selections = {{"n1", "turbo"}};
  CHECK_THROWS_AS(aggregate_capacity(bad_mode, t, d), LookupError);
}

TEST_CASE("capping equivalence") {
  // Capped and uncapped aggregate sums agree on whether demand is covered.
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Topology t;
    const int n = static_cast<int>(rng.uniform_int(0, 5));
    Configuration config;
    for (int i = 0; i < n; ++i) {
      ResourceVector cap = random_vec(rng);
      t.nodes.push_back(make_node("n" + std::to_string(i), "P", cap, vec(0, 0)));
      config.selections.emplace_back("n" + std::to_string(i), "default");
    }
    const Demand d = make_demand(random_vec(rng));
    ResourceVector uncapped;
    for (const Node& node : t.nodes) uncapped = uncapped + node.modes[0].capacity;
    CHECK(dominates(aggregate_capacity(config, t, d), d.vector) ==
          dominates(uncapped, d.vector));
  }
}

TEST_CASE("validate accepts the worked example") {
  const Topology t = example_topology();
  const Demand d = make_demand(vec(8, 32));
  const ValidationReport report = validate(both_nodes(), t, d, Request::unconstrained(t));
  CHECK(report.feasible);
  CHECK(report.violations.empty());
}

TEST_CASE("validate: zero demand, empty config, unconstrained request") {
  const Topology t = example_topology();
  const Demand d = make_demand(vec(0, 0));
  const ValidationReport report = validate(Configuration{}, t, d, Request::unconstrained(t));
  CHECK(report.feasible);
}

TEST_CASE("validate flags provider exclusions") {
  Topology t = example_topology();
  t.rules.push_back({RuleKind::provider_exclusion, "TELSTRA", "OPTUS"});
  const Demand d = make_demand(vec(8, 32));
  const ValidationReport report = validate(both_nodes(), t, d, Request::unconstrained(t));
  CHECK_FALSE(report.feasible);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::exclusion);
  CHECK(report.violations[0].describe() == "exclusion(TELSTRA, OPTUS)");
}

TEST_CASE("validate reports every violation") {
  Topology t = example_topology();
  t.rules.push_back({RuleKind::provider_exclusion, "TELSTRA", "OPTUS"});
  const Demand d = make_demand(vec(100, 100));  // shortfall in both dimensions
  Request r = Request::unconstrained(t);
  r.max_nodes = 1;                      // cardinality violation
  r.allowed_providers = {"VODAFONE"};   // both providers outside the list
  const ValidationReport report = validate(both_nodes(), t, d, r);
  CHECK_FALSE(report.feasible);
  CHECK(report.violations.size() >= 5);
}

TEST_CASE("validate distance and node type constraints") {
  Topology t;
  t.nodes.push_back(make_node("far", "P", vec(10, 10), vec(0, 0), NodeType::CAMERA,
                              /*lat=*/20.0, /*lon=*/20.0));
  Demand d = make_demand(vec(1, 1), test_util::square_zone(0, 0, 0.5));
  Configuration c;
  c.selections = {{"far", "default"}};

  Request r = Request::unconstrained(t);
  r.max_distance_m = fx(1000.0);  // node is thousands of km away
  ValidationReport report = validate(c, t, d, r);
  CHECK_FALSE(report.feasible);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::distance);

  r = Request::unconstrained(t);
  r.allowed_node_types = {NodeType::SENSOR};
  report = validate(c, t, d, r);
  CHECK_FALSE(report.feasible);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::node_type);
}

TEST_CASE("validate budget uses capped per-mode prices") {
  Topology t;
  t.nodes.push_back(make_node("n1", "P", vec(64, 500), vec(1.1, 0.02)));
  const Demand d = make_demand(vec(20, 100));
  Configuration c;
  c.selections = {{"n1", "default"}};
  CHECK(evaluated_mode_price(t.nodes[0], t.nodes[0].modes[0], d.vector) ==
        Fixed4::from_string("24"));

  Request r = Request::unconstrained(t);
  r.max_price = Fixed4::from_string("24");
  CHECK(validate(c, t, d, r).feasible);
  r.max_price = Fixed4::from_string("23.9999");
  const ValidationReport report = validate(c, t, d, r);
  CHECK_FALSE(report.feasible);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::budget);
}

TEST_CASE("two modes of one node violate the selection rule") {
  Topology t;
  Node n = make_node("n1", "P", vec(4, 4), vec(0, 0));
  OperationalMode extra;
  extra.mode_id = "boost";
  extra.capacity = vec(8, 8);
  n.modes.push_back(extra);
  t.nodes.push_back(n);
  Configuration c;
  c.selections = {{"n1", "default"}, {"n1", "boost"}};
  const Demand d = make_demand(vec(1, 1));
  const ValidationReport report = validate(c, t, d, Request::unconstrained(t));
  CHECK_FALSE(report.feasible);
  bool found_exclusion = false;
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::exclusion) found_exclusion = true;
  }
  CHECK(found_exclusion);
}

TEST_CASE("feasible iff violations empty, and relaxation is monotone") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Topology t;
    const int n = static_cast<int>(rng.uniform_int(1, 4));
    Configuration config;
    for (int i = 0; i < n; ++i) {
      const std::string id = "n" + std::to_string(i);
      t.nodes.push_back(make_node(id, i % 2 == 0 ? "TELSTRA" : "OPTUS", random_vec(rng),
                                  vec(0.5, 0.01)));
      config.selections.emplace_back(id, "default");
    }
    if (rng.next_unit() < 0.4) {
      t.rules.push_back({RuleKind::provider_exclusion, "TELSTRA", "OPTUS"});
    }
    const Demand d = make_demand(random_vec(rng));
    Request r = Request::unconstrained(t);
    r.max_nodes = rng.uniform_int(1, 4);
    if (rng.next_unit() < 0.5) r.max_price = Fixed4::from_units(rng.uniform_int(0, 3'000'000));

    const ValidationReport report = validate(config, t, d, r);
    CHECK(report.feasible == report.violations.empty());

    // Relax a single bound; a feasible report must stay feasible.
    Request relaxed = r;
    switch (rng.uniform_int(0, 3)) {
      case 0: relaxed.max_nodes += 2; break;
      case 1: relaxed.max_price = std::nullopt; break;
      case 2: relaxed.max_distance_m = relaxed.max_distance_m + fx(1e6); break;
      default: relaxed.allowed_providers.insert("EXTRA"); break;
    }
    if (report.feasible) CHECK(validate(config, t, d, relaxed).feasible);
  }
}
