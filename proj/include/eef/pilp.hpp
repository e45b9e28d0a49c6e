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
#include <vector>

#include "eef/fairness.hpp"
#include "eef/instance.hpp"
#include "eef/model.hpp"
#include "eef/solver.hpp"

namespace eef {

// Offsets of the four right-hand-side groups inside a b-vector: item
// capacities, entry nonnegativity, per-agent keep-up rows, welfare-gain row.
struct BSplit {
  std::size_t b1_offset = 0, b1_size = 0;
  std::size_t b2_offset = 0, b2_size = 0;
  std::size_t b3_offset = 0, b3_size = 0;
  std::size_t b4_offset = 0, b4_size = 1;

  std::size_t total() const { return b4_offset + b4_size; }
};

// The parametric system for "some allocation dominates the allocation
// behind b": a fixed matrix A in canonical <= form over the allocation
// variables, and a constraint system Q over (b, z) tying b to an envy-free
// allocation z. All rows of A are normalized to <=, so the keep-up and
// welfare rows carry negated utilities and the bound b-entries are the
// negated profile and -(welfare + 1).
struct PilpSystem {
  Instance instance;
  std::vector<std::vector<Rat>> a_rows;  // (m + mn + n + 1) x (mn)
  IlpModel q;                            // b block first, then the z block
  BSplit b_split;

  std::size_t num_rows() const { return a_rows.size(); }
  std::size_t num_cols() const { return a_rows.empty() ? 0 : a_rows[0].size(); }
  std::size_t q_dimension() const { return q.variables.size(); }
  std::size_t z_offset() const { return b_split.total(); }
};

namespace detail {

inline std::vector<std::vector<Rat>> build_a_rows(const Instance& inst) {
  const int n = inst.num_agents();
  const int m = inst.num_items();
  const std::size_t cols = static_cast<std::size_t>(n) * m;
  auto col = [m](int a, int i) { return static_cast<std::size_t>(a) * m + i; };
  std::vector<std::vector<Rat>> rows;
  rows.reserve(m + cols + n + 1);
  for (int i = 0; i < m; ++i) {
    std::vector<Rat> row(cols, Rat(0));
    for (int a = 0; a < n; ++a) row[col(a, i)] = Rat(1);
    rows.push_back(std::move(row));
  }
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i) {
      std::vector<Rat> row(cols, Rat(0));
      row[col(a, i)] = Rat(-1);
      rows.push_back(std::move(row));
    }
  for (int a = 0; a < n; ++a) {
    std::vector<Rat> row(cols, Rat(0));
    for (int i = 0; i < m; ++i) row[col(a, i)] = Rat(-inst.utility(a, i));
    rows.push_back(std::move(row));
  }
  {
    std::vector<Rat> row(cols, Rat(0));
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i) row[col(a, i)] = Rat(-inst.utility(a, i));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline BSplit make_b_split(int n, int m) {
  BSplit s;
  s.b1_offset = 0;
  s.b1_size = m;
  s.b2_offset = s.b1_offset + s.b1_size;
  s.b2_size = static_cast<std::size_t>(m) * n;
  s.b3_offset = s.b2_offset + s.b2_size;
  s.b3_size = n;
  s.b4_offset = s.b3_offset + s.b3_size;
  s.b4_size = 1;
  return s;
}

}  // namespace detail

// Materializes A and Q for an envy-freeness instance. Q pins the capacity
// and nonnegativity groups of b, requires z to be an envy-free allocation
// along the instance's envy graph, and binds the remaining b-entries to z's
// (sign-adjusted) profile and welfare.
inline PilpSystem build_system(const Instance& inst) {
  if (inst.fairness() != Fairness::EF)
    throw ValidationError(errc::unsupported_combination, "/fairness",
                          "the parametric system encodes EF only");
  PilpSystem sys{inst, detail::build_a_rows(inst), IlpModel{}, detail::make_b_split(
                                                                   inst.num_agents(),
                                                                   inst.num_items())};
  const int n = inst.num_agents();
  const int m = inst.num_items();
  IlpModel& q = sys.q;

  const std::size_t nb = sys.b_split.total();
  for (std::size_t k = 0; k < nb; ++k)
    q.add_variable("b" + std::to_string(k), std::nullopt, std::nullopt, /*integral=*/false);
  AllocVarBlock zblock{nb, n, m};
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i)
      q.add_variable("x" + std::to_string(a) + "_" + std::to_string(i), Rat(0),
                     Rat(inst.multiplicity(i)), /*integral=*/true);

  for (int i = 0; i < m; ++i) {
    auto row = q.zero_row();
    row[sys.b_split.b1_offset + i] = Rat(1);
    q.add_constraint("fixb1_" + std::to_string(i), std::move(row), Relation::Eq,
                     Rat(inst.multiplicity(i)));
  }
  for (std::size_t k = 0; k < sys.b_split.b2_size; ++k) {
    auto row = q.zero_row();
    row[sys.b_split.b2_offset + k] = Rat(1);
    q.add_constraint("fixb2_" + std::to_string(k), std::move(row), Relation::Eq, Rat(0));
  }
  for (int i = 0; i < m; ++i) {
    auto row = q.zero_row();
    for (int a = 0; a < n; ++a) row[zblock.index(a, i)] = Rat(1);
    q.add_constraint("zcap" + std::to_string(i), std::move(row), Relation::LessEq,
                     Rat(inst.multiplicity(i)));
  }
  {
    std::size_t e = 0;
    for (const auto& [a, b] : inst.envy_edges()) {
      auto row = q.zero_row();
      for (int i = 0; i < m; ++i) {
        row[zblock.index(a, i)] += Rat(inst.utility(a, i));
        row[zblock.index(b, i)] -= Rat(inst.utility(a, i));
      }
      q.add_constraint("zef" + std::to_string(e++), std::move(row), Relation::GreaterEq,
                       Rat(0));
    }
  }
  for (int a = 0; a < n; ++a) {
    auto row = q.zero_row();
    row[sys.b_split.b3_offset + a] = Rat(1);
    for (int i = 0; i < m; ++i) row[zblock.index(a, i)] = Rat(inst.utility(a, i));
    q.add_constraint("bindb3_" + std::to_string(a), std::move(row), Relation::Eq, Rat(0));
  }
  {
    auto row = q.zero_row();
    row[sys.b_split.b4_offset] = Rat(1);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i) row[zblock.index(a, i)] = Rat(inst.utility(a, i));
    q.add_constraint("bindb4", std::move(row), Relation::Eq, Rat(-1));
  }
  return sys;
}

// The unique b-vector Q pairs with allocation z.
inline std::vector<Rat> induced_b(const Instance& inst, const Allocation& z) {
  const UtilityProfile p = profile_of(inst, z);
  std::vector<Rat> b;
  b.reserve(inst.num_items() + inst.num_items() * inst.num_agents() + inst.num_agents() + 1);
  for (int i = 0; i < inst.num_items(); ++i) b.emplace_back(inst.multiplicity(i));
  for (int k = 0; k < inst.num_items() * inst.num_agents(); ++k) b.emplace_back(0);
  for (int a = 0; a < inst.num_agents(); ++a) b.emplace_back(-p.per_agent[a]);
  b.emplace_back(-(p.welfare + 1));
  return b;
}

// Exact membership of (b, z) in Q.
inline bool q_member(const PilpSystem& sys, const std::vector<Rat>& b, const Allocation& z) {
  if (b.size() != sys.b_split.total())
    throw ValidationError(errc::dimension_mismatch, "/b",
                          "expected " + std::to_string(sys.b_split.total()) + " entries");
  const int n = sys.instance.num_agents();
  const int m = sys.instance.num_items();
  if (z.num_agents() != n || z.num_items() != m)
    throw ValidationError(errc::dimension_mismatch, "/z", "allocation shape mismatch");
  std::vector<Rat> assignment = b;
  assignment.reserve(sys.q_dimension());
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i) assignment.emplace_back(z.entries[a][i]);
  return satisfies(sys.q, assignment);
}

// Maximum encoding length over columns of A. Convention: an entry of value c
// contributes bits(|c|) + 1 (sign) + 1 (delimiter), with bits(0) = 0.
inline std::uint64_t compute_phi(const Instance& inst) {
  const auto rows = detail::build_a_rows(inst);
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::uint64_t phi = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    std::uint64_t len = 0;
    for (const auto& row : rows) {
      const Int entry = row[j].get_num();  // entries are integral
      len += bit_length(entry) + 2;
    }
    phi = std::max(phi, len);
  }
  return phi;
}

// Decides whether b certifies that nothing dominates the allocation behind
// it: true exactly when A x <= b has no integral solution within the item
// multiplicity box. Requires b to lie in the integer projection of Q, which
// is established by searching for a witness z first.
inline bool verify_certificate(const PilpSystem& sys, const std::vector<Rat>& b,
                               const SolveLimits& limits = {}, SolveStats* stats = nullptr) {
  const Instance& inst = sys.instance;
  const int n = inst.num_agents();
  const int m = inst.num_items();
  if (b.size() != sys.b_split.total())
    throw ValidationError(errc::dimension_mismatch, "/b",
                          "expected " + std::to_string(sys.b_split.total()) + " entries");

  // Witness search: an envy-free allocation whose profile matches b's
  // bound rows.
  {
    AllocVarBlock block;
    IlpModel probe = make_allocation_model(inst, &block);
    encode_fairness(inst, probe, block);  // the system is EF-only by construction
    for (int a = 0; a < n; ++a) {
      auto row = probe.zero_row();
      for (int i = 0; i < m; ++i) row[block.index(a, i)] = Rat(inst.utility(a, i));
      probe.add_constraint("pin" + std::to_string(a), std::move(row), Relation::Eq,
                           Rat(-b[sys.b_split.b3_offset + a]));
    }
    SolveOutcome out = ilp_solve(probe, limits);
    if (stats) *stats += out.stats;
    if (out.status == SolveStatus::Limit)
      throw LimitError("solver", "certificate witness search hit a limit");
    if (out.status == SolveStatus::Infeasible)
      throw ValidationError(errc::invalid_certificate, "/b",
                            "b is not in the integer projection of Q");
    const Allocation z = allocation_from_assignment(out.assignment, block);
    if (!q_member(sys, b, z))
      throw ValidationError(errc::invalid_certificate, "/b",
                            "b is not in the integer projection of Q");
  }

  IlpModel main;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i)
      main.add_variable("x" + std::to_string(a) + "_" + std::to_string(i), Rat(0),
                        Rat(inst.multiplicity(i)), /*integral=*/true);
  for (std::size_t r = 0; r < sys.a_rows.size(); ++r)
    main.add_constraint("a" + std::to_string(r), sys.a_rows[r], Relation::LessEq, b[r]);
  SolveOutcome out = ilp_solve(main, limits);
  if (stats) *stats += out.stats;
  if (out.status == SolveStatus::Limit)
    throw LimitError("solver", "certificate check hit a limit");
  return out.status == SolveStatus::Infeasible;
}

// The A-system as a standalone document model: integral allocation
// variables inside the multiplicity box, every row emitted with a zero
// right-hand side placeholder (actual right-hand sides are the b
// parameters, row for row).
inline IlpModel a_system_model(const PilpSystem& sys) {
  const Instance& inst = sys.instance;
  IlpModel model;
  for (int a = 0; a < inst.num_agents(); ++a)
    for (int i = 0; i < inst.num_items(); ++i)
      model.add_variable("x" + std::to_string(a) + "_" + std::to_string(i), Rat(0),
                         Rat(inst.multiplicity(i)), /*integral=*/true);
  for (std::size_t r = 0; r < sys.a_rows.size(); ++r)
    model.add_constraint("a" + std::to_string(r), sys.a_rows[r], Relation::LessEq, Rat(0));
  return model;
}

}  // namespace eef
