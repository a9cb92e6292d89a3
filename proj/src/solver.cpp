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

#include "continuum/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <vector>

#include "continuum/error.hpp"

namespace continuum {

std::string_view solve_status_name(SolveStatus s) {
  return s == SolveStatus::optimal ? "optimal" : "infeasible";
}

ProblemInstance prefilter(const ProblemInstance& inst) {
  validate_instance(inst);
  ProblemInstance out = inst;
  std::vector<AddOn> kept;
  kept.reserve(out.pricing.addons.size());
  std::set<std::string> kept_ids;
  for (const AddOn& a : out.pricing.addons) {
    if (!out.filter.allowed_providers.contains(a.provider)) continue;
    if (!out.filter.allowed_features.contains(a.feature)) continue;
    if (a.distance_m > out.filter.max_distance_m) continue;
    if (out.filter.max_price && a.resolved_price() > *out.filter.max_price) continue;
    kept.push_back(a);
    kept_ids.insert(a.addon_id);
  }
  for (AddOn& a : kept) {
    std::set<std::string> pruned;
    for (const auto& e : a.excludes) {
      if (kept_ids.contains(e)) pruned.insert(e);
    }
    a.excludes = std::move(pruned);
  }
  out.pricing.addons = std::move(kept);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Item {
  std::string id;
  std::string node_key;
  std::int64_t price = 0;                       // Fixed4 units
  std::array<std::int64_t, kDimCount> ext{};    // Fixed4 units
  std::vector<std::uint64_t> conflict_mask;     // over sorted item indexes
};

struct SearchState {
  std::vector<Item> items;
  std::array<std::int64_t, kDimCount> min_usage{};
  std::int64_t max_cardinality = 0;
  std::int64_t budget = 0;
  bool has_budget = false;

  // Suffix tables over the sorted item order.
  std::vector<std::array<std::int64_t, kDimCount>> suffix_max_ext;
  std::vector<std::int64_t> suffix_min_price;

  std::vector<std::uint64_t> selected_mask;
  std::vector<int> selected;
  std::int64_t nodes_explored = 0;

  bool have_best = false;
  std::int64_t best_cost = 0;
  std::vector<int> best_selection;

  void dfs(std::size_t i, std::int64_t cost, std::array<std::int64_t, kDimCount> residual,
           std::int64_t slots_used);
};

bool mask_intersects(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

void SearchState::dfs(std::size_t i, std::int64_t cost,
                      std::array<std::int64_t, kDimCount> residual,
                      std::int64_t slots_used) {
  ++nodes_explored;

  bool covered = true;
  for (std::size_t d = 0; d < kDimCount; ++d) {
    if (residual[d] > 0) {
      covered = false;
      break;
    }
  }
  if (covered) {
    if (!have_best || cost < best_cost) {
      have_best = true;
      best_cost = cost;
      best_selection = selected;
    }
    return;
  }
  if (i >= items.size()) return;

  // Fewest items any completion needs, per dimension.
  std::int64_t needed = 0;
  for (std::size_t d = 0; d < kDimCount; ++d) {
    if (residual[d] <= 0) continue;
    const std::int64_t max_ext = suffix_max_ext[i][d];
    if (max_ext <= 0) return;  // dimension can no longer be covered
    const std::int64_t count = (residual[d] + max_ext - 1) / max_ext;
    needed = std::max(needed, count);
  }
  const std::int64_t remaining_slots = max_cardinality - slots_used;
  if (needed > remaining_slots) return;

  const std::int64_t lower_bound = cost + needed * suffix_min_price[i];
  if (have_best && lower_bound >= best_cost) return;
  if (has_budget && lower_bound > budget) return;

  const Item& item = items[i];

  bool include_ok = !mask_intersects(selected_mask, item.conflict_mask);
  if (include_ok && has_budget && cost + item.price > budget) include_ok = false;
  if (include_ok) {
    // One mode per physical node, independent of declared exclusions.
    for (int s : selected) {
      if (items[s].node_key == item.node_key) {
        include_ok = false;
        break;
      }
    }
  }

  if (include_ok) {
    selected_mask[i / 64] |= 1ULL << (i % 64);
    selected.push_back(static_cast<int>(i));
    auto next_residual = residual;
    for (std::size_t d = 0; d < kDimCount; ++d) next_residual[d] -= item.ext[d];
    dfs(i + 1, cost + item.price, next_residual, slots_used + 1);
    selected.pop_back();
    selected_mask[i / 64] &= ~(1ULL << (i % 64));
  }

  dfs(i + 1, cost, residual, slots_used);
}

AllocationSolution make_infeasible(std::int64_t explored, double seconds) {
  AllocationSolution sol;
  sol.status = SolveStatus::infeasible;
  sol.nodes_explored = explored;
  sol.solve_time_s = seconds;
  return sol;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

AllocationSolution solve(const ProblemInstance& inst) {
  const auto start = Clock::now();
  const ProblemInstance filtered = prefilter(inst);
  const auto& addons = filtered.pricing.addons;
  const std::size_t n = addons.size();

  SearchState state;
  state.max_cardinality = filtered.filter.max_cardinality;
  state.has_budget = filtered.filter.max_price.has_value();
  state.budget = state.has_budget ? filtered.filter.max_price->units() : 0;
  for (std::size_t d = 0; d < kDimCount; ++d) {
    state.min_usage[d] = filtered.filter.min_usage.v[d].units();
  }

  // Sorted by ascending price per unit of demanded coverage; ties by id.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<double> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    double coverage = 0.0;
    for (std::size_t d = 0; d < kDimCount; ++d) {
      const double demand = static_cast<double>(state.min_usage[d]);
      if (demand > 0) {
        coverage += static_cast<double>(addons[i].extensions.v[d].units()) / demand;
      }
    }
    key[i] = coverage > 0
                 ? static_cast<double>(addons[i].resolved_price().units()) / coverage
                 : std::numeric_limits<double>::infinity();
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] < key[b];
    return addons[a].addon_id < addons[b].addon_id;
  });

  state.items.resize(n);
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) {
    const AddOn& a = addons[order[i]];
    Item& item = state.items[i];
    item.id = a.addon_id;
    item.node_key = addon_node_part(a.addon_id);
    item.price = a.resolved_price().units();
    for (std::size_t d = 0; d < kDimCount; ++d) item.ext[d] = a.extensions.v[d].units();
    index_of[a.addon_id] = i;
  }
  const std::size_t words = (n + 63) / 64 + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const AddOn& a = addons[order[i]];
    state.items[i].conflict_mask.assign(words, 0);
    for (const auto& e : a.excludes) {
      const auto it = index_of.find(e);
      if (it == index_of.end()) continue;
      state.items[i].conflict_mask[it->second / 64] |= 1ULL << (it->second % 64);
    }
  }
  state.selected_mask.assign(words, 0);

  // Certified fast infeasibility: even selecting everything cannot cover.
  std::array<std::int64_t, kDimCount> total{};
  for (const Item& item : state.items) {
    for (std::size_t d = 0; d < kDimCount; ++d) total[d] += item.ext[d];
  }
  for (std::size_t d = 0; d < kDimCount; ++d) {
    if (total[d] < state.min_usage[d]) {
      return make_infeasible(1, seconds_since(start));
    }
  }

  state.suffix_max_ext.assign(n + 1, {});
  state.suffix_min_price.assign(n + 1, std::numeric_limits<std::int64_t>::max());
  for (std::size_t i = n; i-- > 0;) {
    state.suffix_max_ext[i] = state.suffix_max_ext[i + 1];
    for (std::size_t d = 0; d < kDimCount; ++d) {
      state.suffix_max_ext[i][d] = std::max(state.suffix_max_ext[i][d], state.items[i].ext[d]);
    }
    state.suffix_min_price[i] =
        std::min(state.suffix_min_price[i + 1], state.items[i].price);
  }
  if (state.suffix_min_price[n] == std::numeric_limits<std::int64_t>::max()) {
    state.suffix_min_price[n] = 0;
  }

  std::array<std::int64_t, kDimCount> residual = state.min_usage;
  state.dfs(0, 0, residual, 0);

  if (!state.have_best) {
    return make_infeasible(state.nodes_explored, seconds_since(start));
  }

  AllocationSolution sol;
  sol.status = SolveStatus::optimal;
  sol.total_cost = Money::from_units(state.best_cost);
  sol.nodes_explored = state.nodes_explored;
  for (int idx : state.best_selection) {
    sol.selection.insert(state.items[idx].id);
    for (std::size_t d = 0; d < kDimCount; ++d) {
      sol.covered.v[d] += Fixed4::from_units(state.items[idx].ext[d]);
    }
  }
  sol.solve_time_s = seconds_since(start);
  return sol;
}

AllocationSolution brute_force(const ProblemInstance& inst) {
  if (inst.pricing.addons.size() > 22) {
    throw Error("brute_force instance too large: " +
                std::to_string(inst.pricing.addons.size()) + " add-ons (max 22)");
  }
  const auto start = Clock::now();
  const ProblemInstance filtered = prefilter(inst);
  const auto& addons = filtered.pricing.addons;
  const std::size_t n = addons.size();

  std::vector<std::string> node_keys(n);
  for (std::size_t i = 0; i < n; ++i) node_keys[i] = addon_node_part(addons[i].addon_id);

  const bool has_budget = filtered.filter.max_price.has_value();
  const std::int64_t budget = has_budget ? filtered.filter.max_price->units() : 0;

  bool have_best = false;
  std::int64_t best_cost = 0;
  std::vector<std::string> best_ids;
  ResourceVector best_covered;
  std::int64_t examined = 0;

  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    ++examined;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ULL << i)) chosen.push_back(i);
    }

    std::set<std::string> nodes;
    bool valid = true;
    for (std::size_t i : chosen) {
      if (!nodes.insert(node_keys[i]).second) {
        valid = false;  // two modes of one node
        break;
      }
    }
    if (!valid) continue;
    if (static_cast<std::int64_t>(nodes.size()) > filtered.filter.max_cardinality) continue;

    for (std::size_t a = 0; a < chosen.size() && valid; ++a) {
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        if (addons[chosen[a]].excludes.contains(addons[chosen[b]].addon_id) ||
            addons[chosen[b]].excludes.contains(addons[chosen[a]].addon_id)) {
          valid = false;
          break;
        }
      }
    }
    if (!valid) continue;

    std::int64_t cost = 0;
    ResourceVector covered;
    for (std::size_t i : chosen) {
      cost += addons[i].resolved_price().units();
      covered = covered + addons[i].extensions;
    }
    if (has_budget && cost > budget) continue;
    if (!dominates(covered, filtered.filter.min_usage)) continue;

    std::vector<std::string> ids;
    for (std::size_t i : chosen) ids.push_back(addons[i].addon_id);
    std::sort(ids.begin(), ids.end());

    if (!have_best || cost < best_cost || (cost == best_cost && ids < best_ids)) {
      have_best = true;
      best_cost = cost;
      best_ids = std::move(ids);
      best_covered = covered;
    }
  }

  if (!have_best) return make_infeasible(examined, seconds_since(start));

  AllocationSolution sol;
  sol.status = SolveStatus::optimal;
  sol.total_cost = Money::from_units(best_cost);
  sol.selection.insert(best_ids.begin(), best_ids.end());
  sol.covered = best_covered;
  sol.nodes_explored = examined;
  sol.solve_time_s = seconds_since(start);
  return sol;
}

}  // namespace continuum
