// Copyright 2026 The eef authors
//
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

#include <optional>
#include <string>
#include <vector>

#include "eef/allocation_model.hpp"
#include "eef/instance.hpp"
#include "eef/model.hpp"
#include "eef/solver.hpp"

namespace eef {

// Domination is profile-determined: componentwise at least as good, strictly
// better somewhere.
inline bool profile_dominates(const UtilityProfile& x, const UtilityProfile& z) {
  bool strict = false;
  for (std::size_t a = 0; a < x.per_agent.size(); ++a) {
    if (x.per_agent[a] < z.per_agent[a]) return false;
    if (x.per_agent[a] > z.per_agent[a]) strict = true;
  }
  return strict;
}

inline bool pareto_dominates(const Instance& inst, const Allocation& x, const Allocation& z) {
  return profile_dominates(profile_of(inst, x), profile_of(inst, z));
}

// System whose integer points are exactly the allocations dominating any
// allocation with profile p: valid allocation, componentwise no worse than
// p, and total welfare strictly above p's. Strictness is one full welfare
// unit because utilities are integers; this is load-bearing and covered by
// unit tests.
inline IlpModel encode_domination(const Instance& inst, const UtilityProfile& p,
                                  AllocVarBlock* block_out = nullptr) {
  AllocVarBlock block;
  IlpModel model = make_allocation_model(inst, &block);
  const int n = inst.num_agents();
  const int m = inst.num_items();
  for (int a = 0; a < n; ++a) {
    auto row = model.zero_row();
    for (int i = 0; i < m; ++i) row[block.index(a, i)] = Rat(inst.utility(a, i));
    model.add_constraint("keep" + std::to_string(a), std::move(row), Relation::GreaterEq,
                         Rat(p.per_agent[a]));
  }
  {
    auto row = model.zero_row();
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i) row[block.index(a, i)] = Rat(inst.utility(a, i));
    model.add_constraint("gain", std::move(row), Relation::GreaterEq, Rat(p.welfare + 1));
  }
  if (block_out) *block_out = block;
  return model;
}

// Some allocation dominating profile p, or nothing when p cannot be
// dominated. Deterministic for fixed input.
inline std::optional<Allocation> find_dominator(const Instance& inst, const UtilityProfile& p,
                                                const SolveLimits& limits = {},
                                                SolveStats* stats = nullptr) {
  AllocVarBlock block;
  IlpModel model = encode_domination(inst, p, &block);
  SolveOutcome out = ilp_solve(model, limits);
  if (stats) *stats += out.stats;
  if (out.status == SolveStatus::Limit)
    throw LimitError("solver", "dominator search hit the node or pivot limit");
  if (out.status == SolveStatus::Infeasible) return std::nullopt;
  return allocation_from_assignment(out.assignment, block);
}

// Welfare-maximal allocation among those dominating profile p. Its profile
// is Pareto-efficient: a dominator of it would beat the welfare maximum
// while still dominating p.
inline std::optional<Allocation> max_welfare_dominator(const Instance& inst,
                                                       const UtilityProfile& p,
                                                       const SolveLimits& limits = {},
                                                       SolveStats* stats = nullptr) {
  AllocVarBlock block;
  IlpModel model = encode_domination(inst, p, &block);
  set_welfare_objective(inst, model, block);
  SolveOutcome out = ilp_solve(model, limits);
  if (stats) *stats += out.stats;
  if (out.status == SolveStatus::Limit)
    throw LimitError("solver", "dominator search hit the node or pivot limit");
  if (out.status == SolveStatus::Infeasible) return std::nullopt;
  return allocation_from_assignment(out.assignment, block);
}

inline bool is_pareto_efficient(const Instance& inst, const Allocation& alloc,
                                const SolveLimits& limits = {}, SolveStats* stats = nullptr) {
  return !find_dominator(inst, profile_of(inst, alloc), limits, stats).has_value();
}

}  // namespace eef
