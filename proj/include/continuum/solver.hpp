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
#include <set>
#include <string>

#include "continuum/mapping.hpp"

namespace continuum {

enum class SolveStatus { optimal, infeasible };

std::string_view solve_status_name(SolveStatus s);

struct AllocationSolution {
  SolveStatus status = SolveStatus::infeasible;
  std::set<std::string> selection;   // add-on ids; empty when infeasible
  Money total_cost;                  // 0 when infeasible
  ResourceVector covered;            // aggregate capped extensions
  double solve_time_s = 0.0;
  std::int64_t nodes_explored = 0;
};

/// Drops add-ons that can never appear in a feasible solution: provider or
/// feature outside the allow-lists, distance over the bound, or price alone
/// over the budget. Dangling exclusion references are removed with them.
ProblemInstance prefilter(const ProblemInstance& inst);

/// Exact minimum-cost search: depth-first branch and bound over add-ons
/// sorted by price per unit of demanded coverage, with admissible
/// cost/cardinality/budget pruning. Deterministic for identical inputs.
AllocationSolution solve(const ProblemInstance& inst);

/// Exhaustive oracle over all subsets; requires at most 22 add-ons.
/// Equal-cost ties resolve to the lexicographically smallest sorted id list.
AllocationSolution brute_force(const ProblemInstance& inst);

}  // namespace continuum
