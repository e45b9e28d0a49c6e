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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eef/eef.hpp"

namespace eef::test {

// Compact literal construction for tests.
inline Instance make_instance(const std::vector<long>& multiplicities,
                              const std::vector<std::vector<long>>& utilities,
                              Fairness fairness = Fairness::EF,
                              std::optional<std::vector<EnvyEdge>> envy_graph = std::nullopt) {
  std::vector<std::string> agents;
  for (std::size_t a = 1; a <= utilities.size(); ++a) agents.push_back("a" + std::to_string(a));
  std::vector<ItemType> items;
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    items.push_back({"g" + std::to_string(i + 1), Int(multiplicities[i])});
  std::vector<std::vector<Int>> u;
  for (const auto& row : utilities) {
    std::vector<Int> r;
    for (long v : row) r.emplace_back(v);
    u.push_back(std::move(r));
  }
  return Instance::validated(std::move(agents), std::move(items), std::move(u), fairness,
                             std::move(envy_graph));
}

inline Allocation make_allocation(const std::vector<std::vector<long>>& entries) {
  Allocation a;
  for (const auto& row : entries) {
    std::vector<Int> r;
    for (long v : row) r.emplace_back(v);
    a.entries.push_back(std::move(r));
  }
  return a;
}

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Brute-force ILP ground truth: enumerates the integer lattice inside the
// variable box. Requires every variable to be integral with finite bounds.
struct LatticeResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Rat> objective;
  std::vector<std::vector<Rat>> optima;  // all argmax/argmin points
};

inline LatticeResult lattice_solve(const IlpModel& model) {
  LatticeResult result;
  std::vector<Rat> point(model.variables.size());
  const bool maximize =
      model.objective && model.objective->direction == Direction::Maximize;

  std::function<void(std::size_t)> recurse = [&](std::size_t j) {
    if (j == model.variables.size()) {
      if (!satisfies(model, point)) return;
      if (!model.objective) {
        result.status = SolveStatus::Feasible;
        return;
      }
      const Rat value = objective_value_of(model, point);
      if (result.status == SolveStatus::Infeasible ||
          (maximize ? value > *result.objective : value < *result.objective)) {
        result.status = SolveStatus::Optimal;
        result.objective = value;
        result.optima.clear();
        result.optima.push_back(point);
      } else if (result.objective && value == *result.objective) {
        result.optima.push_back(point);
      }
      return;
    }
    const Int lo = rat_ceil(*model.variables[j].lower);
    const Int hi = rat_floor(*model.variables[j].upper);
    for (Int v = lo; v <= hi; ++v) {
      point[j] = Rat(v);
      recurse(j + 1);
    }
  };
  recurse(0);
  return result;
}

// Seeded random model family used for solver/oracle equivalence: up to four
// integral variables with bounds inside [-5, 5], up to five constraints with
// coefficients in [-3, 3], and (usually) a small objective.
inline IlpModel random_model(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IlpModel model;
  const int nvars = static_cast<int>(draw(rng, 1, 4));
  for (int j = 0; j < nvars; ++j) {
    const long lo = draw(rng, -5, 4);
    const long hi = draw(rng, lo, 5);
    model.add_variable("v" + std::to_string(j), Rat(lo), Rat(hi), /*integral=*/true);
  }
  const int ncons = static_cast<int>(draw(rng, 0, 5));
  for (int c = 0; c < ncons; ++c) {
    std::vector<Rat> row;
    for (int j = 0; j < nvars; ++j) row.emplace_back(draw(rng, -3, 3));
    const Relation rel =
        std::array{Relation::LessEq, Relation::Eq, Relation::GreaterEq}[draw(rng, 0, 2)];
    model.add_constraint("c" + std::to_string(c), std::move(row), rel,
                         Rat(draw(rng, -10, 10)));
  }
  if (draw(rng, 0, 9) > 0) {  // every tenth model is pure feasibility
    Objective obj;
    obj.direction = draw(rng, 0, 1) ? Direction::Maximize : Direction::Minimize;
    for (int j = 0; j < nvars; ++j) obj.coefficients.emplace_back(draw(rng, -3, 3));
    model.objective = std::move(obj);
  }
  return model;
}

// Exhaustive EEF ground truth via the oracle module's census.
inline bool brute_answer(const Instance& inst) {
  return brute_eef(inst).verdict.yes();
}

}  // namespace eef::test
