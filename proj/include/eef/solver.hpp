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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eef/allocation_model.hpp"
#include "eef/instance.hpp"
#include "eef/model.hpp"
#include "eef/simplex.hpp"

namespace eef {

// Exact branch-and-bound over the rational LP relaxation. Branching variable
// is the lowest-index fractional integer variable; depth-first with the
// floor branch explored first; incumbent pruning by exact rational
// comparison. Deterministic: identical models give identical outcomes and
// identical node statistics.
inline SolveOutcome ilp_solve(const IlpModel& model, const SolveLimits& limits = {}) {
  validate_model(model);
  for (const auto& v : model.variables)
    if (v.integral && (!v.lower || !v.upper))
      throw ValidationError(errc::invalid_model, v.name,
                            "integer variable needs finite bounds");

  const bool maximize = model.objective && model.objective->direction == Direction::Maximize;

  // When the objective is integral over integral variables, every integer
  // point has an integer objective, so LP bounds can be rounded before
  // incumbent comparison.
  bool integral_objective = model.objective.has_value();
  if (model.objective) {
    for (std::size_t j = 0; j < model.variables.size(); ++j) {
      const Rat& c = model.objective->coefficients[j];
      if (c == 0) continue;
      if (!model.variables[j].integral || !is_integer(c)) {
        integral_objective = false;
        break;
      }
    }
  }

  struct Node {
    std::vector<MaybeRat> lower, upper;
  };
  Node root;
  root.lower.reserve(model.variables.size());
  root.upper.reserve(model.variables.size());
  for (const auto& v : model.variables) {
    root.lower.push_back(v.lower);
    root.upper.push_back(v.upper);
  }

  std::vector<Node> stack;
  stack.push_back(std::move(root));

  SolveOutcome best;
  best.status = SolveStatus::Infeasible;
  bool have_incumbent = false;
  SolveStats stats;

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();

    if (stats.nodes >= limits.node_limit) {
      SolveOutcome out = std::move(best);
      out.status = SolveStatus::Limit;
      out.stats = stats;
      return out;
    }
    ++stats.nodes;

    SolveOutcome lp =
        detail::simplex_solve(model, node.lower, node.upper, limits.pivot_limit - stats.pivots);
    stats.pivots += lp.stats.pivots;
    if (lp.status == SolveStatus::Limit) {
      SolveOutcome out = std::move(best);
      out.status = SolveStatus::Limit;
      out.stats = stats;
      return out;
    }
    if (lp.status == SolveStatus::Infeasible) continue;
    if (lp.status == SolveStatus::Unbounded) {
      SolveOutcome out;
      out.status = SolveStatus::Unbounded;
      out.stats = stats;
      return out;
    }

    if (model.objective && have_incumbent) {
      Rat bound = *lp.objective_value;
      if (integral_objective) bound = maximize ? Rat(rat_floor(bound)) : Rat(rat_ceil(bound));
      if (maximize ? bound <= *best.objective_value : bound >= *best.objective_value) continue;
    }

    std::size_t frac = model.variables.size();
    for (std::size_t j = 0; j < model.variables.size(); ++j) {
      if (model.variables[j].integral && !is_integer(lp.assignment[j])) {
        frac = j;
        break;
      }
    }

    if (frac == model.variables.size()) {
      if (!model.objective) {
        lp.status = SolveStatus::Feasible;
        lp.stats = stats;
        return lp;
      }
      if (!have_incumbent ||
          (maximize ? *lp.objective_value > *best.objective_value
                    : *lp.objective_value < *best.objective_value)) {
        best = lp;
        best.status = SolveStatus::Optimal;
        have_incumbent = true;
      }
      continue;
    }

    const Int floor_val = rat_floor(lp.assignment[frac]);
    Node ceil_child = node;
    ceil_child.lower[frac] = Rat(floor_val + 1);
    Node floor_child = std::move(node);
    floor_child.upper[frac] = Rat(floor_val);
    stack.push_back(std::move(ceil_child));
    stack.push_back(std::move(floor_child));
  }

  best.stats = stats;
  return best;
}

// Appends the negation of "profile q Pareto-dominates the allocation's
// profile" to a model holding an allocation block: one binary per agent
// activating "this agent strictly beats q", one binary activating "welfare
// reaches q's welfare", and a covering row requiring at least one of them.
// Activation constants come from the exact per-agent utility bounds.
inline void add_nogood_dominance_cut(IlpModel& model, const Instance& inst,
                                     const AllocVarBlock& block, const UtilityProfile& q,
                                     int cut_index) {
  const int n = inst.num_agents();
  const int m = inst.num_items();
  const std::string tag = "d" + std::to_string(cut_index) + "_";

  std::vector<std::size_t> selectors;
  selectors.reserve(n + 1);
  for (int k = 0; k <= n; ++k)
    selectors.push_back(
        model.add_variable(tag + std::to_string(k), Rat(0), Rat(1), /*integral=*/true));

  Int welfare_lb = 0, welfare_ub = 0;
  for (int a = 0; a < n; ++a) {
    welfare_lb += inst.utility_lower_bound(a);
    welfare_ub += inst.utility_upper_bound(a);
  }

  // d_0: total welfare at least q's welfare.
  {
    const Int big = max_int(welfare_ub, q.welfare) - welfare_lb + 1;
    auto row = model.zero_row();
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i) row[block.index(a, i)] = Rat(inst.utility(a, i));
    row[selectors[0]] = Rat(-big);
    model.add_constraint("cut" + std::to_string(cut_index) + "_welfare", std::move(row),
                         Relation::GreaterEq, Rat(q.welfare - big));
  }

  // d_a: agent a strictly exceeds q_a.
  for (int a = 0; a < n; ++a) {
    const Int lb = inst.utility_lower_bound(a);
    const Int big = max_int(inst.utility_upper_bound(a), q.per_agent[a]) - lb + 1;
    auto row = model.zero_row();
    for (int i = 0; i < m; ++i) row[block.index(a, i)] = Rat(inst.utility(a, i));
    row[selectors[a + 1]] = Rat(-big);
    model.add_constraint("cut" + std::to_string(cut_index) + "_agent" + std::to_string(a),
                         std::move(row), Relation::GreaterEq, Rat(q.per_agent[a] + 1 - big));
  }

  {
    auto row = model.zero_row();
    for (std::size_t s : selectors) row[s] = Rat(1);
    model.add_constraint("cut" + std::to_string(cut_index) + "_any", std::move(row),
                         Relation::GreaterEq, Rat(1));
  }
}

}  // namespace eef
