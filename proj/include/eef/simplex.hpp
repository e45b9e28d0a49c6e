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

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eef/model.hpp"
#include "eef/numbers.hpp"

namespace eef {

struct SolveLimits {
  std::int64_t node_limit = 1'000'000;
  std::int64_t pivot_limit = 10'000'000;
};

namespace detail {

// Exact rational primal simplex over bounded variables. Rows are turned into
// equalities with one slack each; bounds stay implicit (nonbasic variables
// rest at a bound instead of occupying rows). Bland's rule throughout:
// entering variable is the lowest-index eligible column, the leaving
// candidate on a ratio tie is the lowest-index variable, and a bound flip of
// the entering column competes under its own index. Deterministic and free
// of cycling.
class Simplex {
 public:
  Simplex(const IlpModel& model, const std::vector<MaybeRat>& lower,
          const std::vector<MaybeRat>& upper)
      : model_(model) {
    nstruct_ = model.variables.size();
    nrows_ = model.constraints.size();
    ncols_ = nstruct_ + nrows_;  // artificials appended on demand
    lower_.assign(lower.begin(), lower.end());
    upper_.assign(upper.begin(), upper.end());
    lower_.resize(ncols_);
    upper_.resize(ncols_);
    for (std::size_t r = 0; r < nrows_; ++r) {
      const std::size_t s = nstruct_ + r;
      switch (model.constraints[r].relation) {
        case Relation::LessEq:
          lower_[s] = Rat(0);
          break;
        case Relation::GreaterEq:
          upper_[s] = Rat(0);
          break;
        case Relation::Eq:
          lower_[s] = Rat(0);
          upper_[s] = Rat(0);
          break;
      }
    }
  }

  // Runs phase 1 (+ phase 2 when the model has an objective) within the
  // pivot budget. The returned outcome carries the number of pivots used.
  SolveOutcome solve(std::int64_t pivot_budget) {
    build_tableau();
    SolveOutcome out;
    out.stats.pivots = 0;

    if (!artificials_.empty()) {
      std::vector<Rat> phase1_cost(ncols_, Rat(0));
      for (std::size_t a : artificials_) phase1_cost[a] = Rat(1);
      const StepResult res = run_phase(phase1_cost, pivot_budget, out.stats.pivots);
      if (res == StepResult::LimitHit) {
        out.status = SolveStatus::Limit;
        return out;
      }
      assert(res == StepResult::Converged);
      Rat infeasibility(0);
      for (std::size_t r = 0; r < nrows_; ++r)
        if (basis_[r] >= nstruct_ + nrows_) infeasibility += values_[r];
      if (infeasibility != 0) {
        out.status = SolveStatus::Infeasible;
        return out;
      }
      for (std::size_t a : artificials_) {
        lower_[a] = Rat(0);
        upper_[a] = Rat(0);
      }
    }

    if (model_.objective) {
      std::vector<Rat> cost(ncols_, Rat(0));
      const bool maximize = model_.objective->direction == Direction::Maximize;
      for (std::size_t j = 0; j < nstruct_; ++j) {
        const Rat& c = model_.objective->coefficients[j];
        cost[j] = maximize ? Rat(-c) : c;
      }
      const StepResult res = run_phase(cost, pivot_budget, out.stats.pivots);
      if (res == StepResult::LimitHit) {
        out.status = SolveStatus::Limit;
        return out;
      }
      if (res == StepResult::UnboundedRay) {
        out.status = SolveStatus::Unbounded;
        return out;
      }
      out.status = SolveStatus::Optimal;
    } else {
      out.status = SolveStatus::Feasible;
    }

    out.assignment = extract_assignment();
    if (model_.objective) out.objective_value = objective_value_of(model_, out.assignment);
    if (!satisfies_relaxation(out.assignment))
      throw std::logic_error("simplex produced an assignment violating the model");
    return out;
  }

 private:
  enum class Status : unsigned char { AtLower, AtUpper, FreeZero };
  enum class StepResult { Converged, UnboundedRay, LimitHit };

  void build_tableau() {
    rows_.assign(nrows_, std::vector<Rat>());
    basis_.assign(nrows_, 0);
    values_.assign(nrows_, Rat(0));
    status_.assign(ncols_, Status::FreeZero);

    for (std::size_t j = 0; j < ncols_; ++j) {
      if (lower_[j])
        status_[j] = Status::AtLower;
      else if (upper_[j])
        status_[j] = Status::AtUpper;
      else
        status_[j] = Status::FreeZero;
    }

    for (std::size_t r = 0; r < nrows_; ++r) {
      auto& row = rows_[r];
      row.assign(ncols_, Rat(0));
      const auto& c = model_.constraints[r];
      for (std::size_t j = 0; j < nstruct_; ++j) row[j] = c.coefficients[j];
      row[nstruct_ + r] = Rat(1);
      basis_[r] = nstruct_ + r;
    }

    // Slack values implied by resting every structural column at its status
    // value; rows whose slack lands outside its own bounds get an artificial
    // column that starts basic at the violation amount.
    for (std::size_t r = 0; r < nrows_; ++r) {
      const std::size_t s = nstruct_ + r;
      Rat v = model_.constraints[r].rhs;
      for (std::size_t j = 0; j < nstruct_; ++j)
        if (rows_[r][j] != 0) v -= rows_[r][j] * nonbasic_value(j);
      if (lower_[s] && v < *lower_[s]) {
        status_[s] = Status::AtLower;
        add_artificial(r, *lower_[s] - v, /*negate_row=*/true);
      } else if (upper_[s] && v > *upper_[s]) {
        status_[s] = Status::AtUpper;
        add_artificial(r, v - *upper_[s], /*negate_row=*/false);
      } else {
        values_[r] = v;
      }
    }
  }

  void add_artificial(std::size_t r, Rat amount, bool negate_row) {
    const std::size_t col = ncols_;
    ++ncols_;
    lower_.push_back(Rat(0));
    upper_.push_back(MaybeRat{});
    status_.push_back(Status::AtLower);
    for (std::size_t rr = 0; rr < nrows_; ++rr)
      rows_[rr].push_back(rr == r ? Rat(negate_row ? -1 : 1) : Rat(0));
    if (negate_row)
      for (auto& e : rows_[r]) e = -e;
    basis_[r] = col;
    values_[r] = std::move(amount);
    artificials_.push_back(col);
  }

  Rat nonbasic_value(std::size_t j) const {
    switch (status_[j]) {
      case Status::AtLower: return *lower_[j];
      case Status::AtUpper: return *upper_[j];
      case Status::FreeZero: return Rat(0);
    }
    return Rat(0);
  }

  bool is_fixed(std::size_t j) const { return lower_[j] && upper_[j] && *lower_[j] == *upper_[j]; }

  StepResult run_phase(const std::vector<Rat>& cost, std::int64_t pivot_budget,
                       std::int64_t& pivots) {
    std::vector<bool> in_basis(ncols_, false);
    for (std::size_t r = 0; r < nrows_; ++r) in_basis[basis_[r]] = true;

    std::vector<Rat> reduced = cost;
    for (std::size_t r = 0; r < nrows_; ++r) {
      const Rat coef = reduced[basis_[r]];
      if (coef == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (rows_[r][j] != 0) reduced[j] -= coef * rows_[r][j];
    }

    while (true) {
      // Entering column: Bland.
      std::size_t enter = ncols_;
      int dir = 0;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (in_basis[j] || is_fixed(j)) continue;
        const int sgn = mpq_sgn(reduced[j].get_mpq_t());
        if (sgn == 0) continue;
        if (status_[j] == Status::AtLower && sgn < 0) {
          enter = j;
          dir = 1;
          break;
        }
        if (status_[j] == Status::AtUpper && sgn > 0) {
          enter = j;
          dir = -1;
          break;
        }
        if (status_[j] == Status::FreeZero) {
          enter = j;
          dir = sgn < 0 ? 1 : -1;
          break;
        }
      }
      if (enter == ncols_) return StepResult::Converged;

      // Ratio test: earliest blocking bound; ties resolved by variable index.
      bool have_limit = false;
      Rat best_t(0);
      std::size_t best_var = 0;
      std::size_t best_row = nrows_;  // nrows_ marks a bound flip of `enter`
      if (lower_[enter] && upper_[enter]) {
        have_limit = true;
        best_t = *upper_[enter] - *lower_[enter];
        best_var = enter;
      }
      for (std::size_t r = 0; r < nrows_; ++r) {
        const Rat& coeff = rows_[r][enter];
        if (coeff == 0) continue;
        const int asign = dir * mpq_sgn(coeff.get_mpq_t());
        const std::size_t b = basis_[r];
        Rat t;
        if (asign > 0) {
          if (!lower_[b]) continue;
          t = (values_[r] - *lower_[b]) / (dir > 0 ? Rat(coeff) : Rat(-coeff));
        } else {
          if (!upper_[b]) continue;
          t = (values_[r] - *upper_[b]) / (dir > 0 ? Rat(coeff) : Rat(-coeff));
        }
        assert(t >= 0);
        if (!have_limit || t < best_t || (t == best_t && b < best_var)) {
          have_limit = true;
          best_t = std::move(t);
          best_var = b;
          best_row = r;
        }
      }
      if (!have_limit) return StepResult::UnboundedRay;

      if (pivots >= pivot_budget) return StepResult::LimitHit;
      ++pivots;

      // Move every basic value along the entering direction.
      if (best_t != 0) {
        for (std::size_t r = 0; r < nrows_; ++r) {
          if (rows_[r][enter] == 0) continue;
          values_[r] -= Rat(dir) * best_t * rows_[r][enter];
        }
      }

      if (best_row == nrows_) {
        // Bound flip, basis unchanged.
        status_[enter] = status_[enter] == Status::AtLower ? Status::AtUpper : Status::AtLower;
        continue;
      }

      const std::size_t leave = basis_[best_row];
      const int asign = dir * mpq_sgn(rows_[best_row][enter].get_mpq_t());
      const Rat enter_value = nonbasic_value(enter) + Rat(dir) * best_t;

      status_[leave] = asign > 0 ? Status::AtLower : Status::AtUpper;
      in_basis[leave] = false;
      in_basis[enter] = true;
      basis_[best_row] = enter;
      values_[best_row] = enter_value;

      // Gaussian step restoring the unit column for the new basic variable.
      auto& prow = rows_[best_row];
      const Rat pivot = prow[enter];
      if (pivot != 1) {
        for (auto& e : prow)
          if (e != 0) e /= pivot;
      }
      for (std::size_t r = 0; r < nrows_; ++r) {
        if (r == best_row) continue;
        const Rat f = rows_[r][enter];
        if (f == 0) continue;
        auto& row = rows_[r];
        for (std::size_t j = 0; j < ncols_; ++j)
          if (prow[j] != 0) row[j] -= f * prow[j];
      }
      const Rat fd = reduced[enter];
      if (fd != 0) {
        for (std::size_t j = 0; j < ncols_; ++j)
          if (prow[j] != 0) reduced[j] -= fd * prow[j];
      }
    }
  }

  std::vector<Rat> extract_assignment() const {
    std::vector<Rat> x(nstruct_, Rat(0));
    std::vector<bool> basic(ncols_, false);
    for (std::size_t r = 0; r < nrows_; ++r) {
      basic[basis_[r]] = true;
      if (basis_[r] < nstruct_) x[basis_[r]] = values_[r];
    }
    for (std::size_t j = 0; j < nstruct_; ++j)
      if (!basic[j]) x[j] = nonbasic_value(j);
    return x;
  }

  // Bounds come from the override set, so plain `satisfies` (which reads the
  // model's own bounds) is not applicable here.
  bool satisfies_relaxation(const std::vector<Rat>& x) const {
    for (std::size_t j = 0; j < nstruct_; ++j) {
      if (lower_[j] && x[j] < *lower_[j]) return false;
      if (upper_[j] && x[j] > *upper_[j]) return false;
    }
    for (const auto& c : model_.constraints) {
      Rat lhs(0);
      for (std::size_t j = 0; j < nstruct_; ++j)
        if (c.coefficients[j] != 0) lhs += c.coefficients[j] * x[j];
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

  const IlpModel& model_;
  std::size_t nstruct_ = 0;
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<MaybeRat> lower_, upper_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rat> values_;
  std::vector<Status> status_;
  std::vector<std::size_t> artificials_;
};

inline SolveOutcome simplex_solve(const IlpModel& model, const std::vector<MaybeRat>& lower,
                                  const std::vector<MaybeRat>& upper,
                                  std::int64_t pivot_budget) {
  Simplex s(model, lower, upper);
  return s.solve(pivot_budget);
}

}  // namespace detail

// Exact LP solve ignoring integrality flags. Deterministic: Bland's rule
// fixes every pivot choice.
inline SolveOutcome lp_solve(const IlpModel& model, const SolveLimits& limits = {}) {
  validate_model(model);
  std::vector<MaybeRat> lower, upper;
  lower.reserve(model.variables.size());
  upper.reserve(model.variables.size());
  for (const auto& v : model.variables) {
    lower.push_back(v.lower);
    upper.push_back(v.upper);
  }
  return detail::simplex_solve(model, lower, upper, limits.pivot_limit);
}

}  // namespace eef
