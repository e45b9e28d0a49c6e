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
#include <optional>
#include <string>
#include <vector>

#include "eef/errors.hpp"
#include "eef/numbers.hpp"

namespace eef {

enum class Relation { LessEq, Eq, GreaterEq };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::LessEq: return "<=";
    case Relation::Eq: return "=";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

enum class Direction { Maximize, Minimize };

struct ModelVariable {
  std::string name;
  MaybeRat lower;  // absent = unbounded below
  MaybeRat upper;  // absent = unbounded above
  bool integral = false;

  bool operator==(const ModelVariable&) const = default;
};

struct LinearConstraint {
  std::string name;
  std::vector<Rat> coefficients;  // one entry per model variable
  Relation relation = Relation::LessEq;
  Rat rhs;

  bool operator==(const LinearConstraint&) const = default;
};

struct Objective {
  Direction direction = Direction::Maximize;
  std::vector<Rat> coefficients;

  bool operator==(const Objective&) const = default;
};

// An exact-rational linear constraint system with variable bounds,
// integrality flags, and an optional linear objective.
struct IlpModel {
  std::vector<ModelVariable> variables;
  std::vector<LinearConstraint> constraints;
  std::optional<Objective> objective;

  // Existing rows widen with zero coefficients for the new variable.
  std::size_t add_variable(std::string name, MaybeRat lower, MaybeRat upper, bool integral) {
    variables.push_back({std::move(name), std::move(lower), std::move(upper), integral});
    for (auto& c : constraints) c.coefficients.resize(variables.size(), Rat(0));
    if (objective) objective->coefficients.resize(variables.size(), Rat(0));
    return variables.size() - 1;
  }

  void add_constraint(std::string name, std::vector<Rat> coefficients, Relation relation,
                      Rat rhs) {
    constraints.push_back({std::move(name), std::move(coefficients), relation, std::move(rhs)});
  }

  std::vector<Rat> zero_row() const { return std::vector<Rat>(variables.size(), Rat(0)); }

  bool operator==(const IlpModel&) const = default;
};

// Throws ValidationError unless the model satisfies its structural
// invariants: row widths, bound ordering, integer bounds on integer
// variables.
inline void validate_model(const IlpModel& model) {
  const std::size_t nvars = model.variables.size();
  for (const auto& v : model.variables) {
    if (v.lower && v.upper && *v.lower > *v.upper)
      throw ValidationError(errc::invalid_model, v.name, "lower bound exceeds upper bound");
    if (v.integral) {
      if (v.lower && !is_integer(*v.lower))
        throw ValidationError(errc::invalid_model, v.name,
                              "integer variable with fractional lower bound");
      if (v.upper && !is_integer(*v.upper))
        throw ValidationError(errc::invalid_model, v.name,
                              "integer variable with fractional upper bound");
    }
  }
  for (const auto& c : model.constraints)
    if (c.coefficients.size() != nvars)
      throw ValidationError(errc::invalid_model, c.name, "coefficient row width mismatch");
  if (model.objective && model.objective->coefficients.size() != nvars)
    throw ValidationError(errc::invalid_model, "objective", "coefficient row width mismatch");
}

enum class SolveStatus { Optimal, Feasible, Infeasible, Unbounded, Limit };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Limit: return "limit";
  }
  return "?";
}

struct SolveStats {
  std::int64_t pivots = 0;
  std::int64_t nodes = 0;

  SolveStats& operator+=(const SolveStats& o) {
    pivots += o.pivots;
    nodes += o.nodes;
    return *this;
  }
  bool operator==(const SolveStats&) const = default;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<Rat> assignment;  // one value per variable when status is optimal/feasible
  std::optional<Rat> objective_value;
  SolveStats stats;
};

// Exact satisfaction check of a full assignment against every constraint,
// bound, and integrality flag.
inline bool satisfies(const IlpModel& model, const std::vector<Rat>& assignment,
                      bool check_integrality = true) {
  if (assignment.size() != model.variables.size()) return false;
  for (std::size_t j = 0; j < model.variables.size(); ++j) {
    const auto& v = model.variables[j];
    if (v.lower && assignment[j] < *v.lower) return false;
    if (v.upper && assignment[j] > *v.upper) return false;
    if (check_integrality && v.integral && !is_integer(assignment[j])) return false;
  }
  for (const auto& c : model.constraints) {
    Rat lhs(0);
    for (std::size_t j = 0; j < c.coefficients.size(); ++j)
      if (c.coefficients[j] != 0) lhs += c.coefficients[j] * assignment[j];
    switch (c.relation) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Eq:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

inline Rat objective_value_of(const IlpModel& model, const std::vector<Rat>& assignment) {
  Rat v(0);
  if (!model.objective) return v;
  for (std::size_t j = 0; j < assignment.size(); ++j)
    if (model.objective->coefficients[j] != 0)
      v += model.objective->coefficients[j] * assignment[j];
  return v;
}

}  // namespace eef
