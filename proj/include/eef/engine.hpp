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
#include <optional>
#include <string>
#include <vector>

#include "eef/dominance.hpp"
#include "eef/fairness.hpp"
#include "eef/instance.hpp"
#include "eef/pilp.hpp"
#include "eef/solver.hpp"
#include "eef/verdict.hpp"

namespace eef {

struct EngineOptions {
  SolveLimits limits;
  std::int64_t iteration_limit = 10'000;
};

namespace detail {

// Fairness-feasible allocation whose profile equals `target` exactly, if one
// exists. Profile equality suffices because domination is
// profile-determined.
inline std::optional<Allocation> fair_allocation_with_profile(const Instance& inst,
                                                              const UtilityProfile& target,
                                                              const SolveLimits& limits,
                                                              EngineStats& stats) {
  AllocVarBlock block;
  IlpModel probe = make_allocation_model(inst, &block);
  encode_fairness(inst, probe, block);
  for (int a = 0; a < inst.num_agents(); ++a) {
    auto row = probe.zero_row();
    for (int i = 0; i < inst.num_items(); ++i)
      row[block.index(a, i)] = Rat(inst.utility(a, i));
    probe.add_constraint("pin" + std::to_string(a), std::move(row), Relation::Eq,
                         Rat(target.per_agent[a]));
  }
  ++stats.probe_solves;
  SolveOutcome out = ilp_solve(probe, limits);
  stats.solver += out.stats;
  if (out.status == SolveStatus::Limit)
    throw LimitError("solver", "profile probe hit the node or pivot limit");
  if (out.status == SolveStatus::Infeasible) return std::nullopt;
  return allocation_from_assignment(out.assignment, block);
}

}  // namespace detail

// Decides whether a fairness-feasible, Pareto-efficient allocation exists.
//
// Alternation: the master problem maximizes welfare over fair allocations
// not yet known to be dominated; each counterexample is lifted to a
// welfare-maximal (hence Pareto-efficient) dominator profile, probed for
// fair attainability, and otherwise recorded as a blocking cut. Recorded
// profiles never repeat, and there are finitely many efficient profiles, so
// the loop terminates.
//
// The fair-attainability probe is an optimization, not needed for
// correctness: a blocked profile that is fairly attainable would otherwise
// be rediscovered one iteration later, when the master lands on an
// allocation carrying it (such an allocation survives every cut, including
// its own profile's). The probe answers YES immediately instead.
inline Verdict solve_eef(const Instance& inst, const EngineOptions& options = {}) {
  Verdict verdict;
  EngineStats& stats = verdict.stats;

  AllocVarBlock block;
  IlpModel master = make_allocation_model(inst, &block);
  encode_fairness(inst, master, block);
  set_welfare_objective(inst, master, block);

  std::vector<UtilityProfile> recorded;

  for (std::int64_t iter = 1; iter <= options.iteration_limit; ++iter) {
    verdict.iterations = iter;
    ++stats.master_solves;
    SolveOutcome out = ilp_solve(master, options.limits);
    stats.solver += out.stats;
    if (out.status == SolveStatus::Limit)
      throw LimitError("solver", "master solve hit the node or pivot limit after " +
                                     std::to_string(iter - 1) + " iterations with " +
                                     std::to_string(recorded.size()) + " blocked profiles");
    if (out.status == SolveStatus::Infeasible) {
      verdict.answer = Verdict::Answer::No;
      verdict.blocked_profiles = std::move(recorded);
      return verdict;
    }
    assert(out.status == SolveStatus::Optimal);

    const Allocation fair = allocation_from_assignment(out.assignment, block);
    const UtilityProfile p = profile_of(inst, fair);

    ++stats.dominator_solves;
    auto dominator = find_dominator(inst, p, options.limits, &stats.solver);
    if (!dominator) {
      verdict.answer = Verdict::Answer::Yes;
      verdict.certificate = fair;
      verdict.certificate_profile = p;
      verdict.blocked_profiles = std::move(recorded);
      return verdict;
    }

    ++stats.dominator_solves;
    auto best = max_welfare_dominator(inst, p, options.limits, &stats.solver);
    assert(best.has_value());
    const UtilityProfile q = profile_of(inst, *best);

    if (auto fair_at_q =
            detail::fair_allocation_with_profile(inst, q, options.limits, stats)) {
      verdict.answer = Verdict::Answer::Yes;
      verdict.certificate = std::move(*fair_at_q);
      verdict.certificate_profile = q;
      verdict.blocked_profiles = std::move(recorded);
      return verdict;
    }

    add_nogood_dominance_cut(master, inst, block, q, static_cast<int>(recorded.size()));
    recorded.push_back(q);
  }
  throw LimitError("iterations",
                   "no decision after " + std::to_string(options.iteration_limit) +
                       " iterations; blocked profiles so far: " +
                       std::to_string(recorded.size()));
}

// Replayable check of a concrete allocation: the fairness verdict with
// per-edge detail, the efficiency verdict with an explicit dominator when
// one exists, and the induced right-hand-side vector for cross-checking
// against the parametric system (EF instances only).
struct VerifyReport {
  Fairness notion = Fairness::EF;
  bool fair = false;
  EnvyReport envy;  // envious pairs along the envy graph

  struct Ef1Edge {
    int from = 0, to = 0;
    bool ok = false;
    std::optional<int> removed_item;  // most valuable present item type
    Int residual;                     // envy left after the removal
  };
  std::vector<Ef1Edge> ef1_edges;  // edges with envy, EF1 instances

  struct EfxViolation {
    int from = 0, to = 0;
    int item = 0;
    Int residual;  // envy left after removing one copy of `item`
  };
  std::vector<EfxViolation> efx_violations;

  bool efficient = false;
  std::optional<Allocation> dominator;
  std::optional<UtilityProfile> dominator_profile;

  std::vector<Rat> induced_b;  // empty unless the instance is EF

  bool ok() const { return fair && efficient; }
};

inline VerifyReport verify(const Instance& inst, const Allocation& alloc,
                           const SolveLimits& limits = {}) {
  validate_allocation(inst, alloc);
  VerifyReport report;
  report.notion = inst.fairness();
  report.envy = is_envy_free(inst, alloc);
  switch (inst.fairness()) {
    case Fairness::EF:
      report.fair = report.envy.envy_free();
      break;
    case Fairness::EF1: {
      report.fair = is_ef1(inst, alloc);
      for (const auto& pair : report.envy.envious_pairs) {
        VerifyReport::Ef1Edge edge;
        edge.from = pair.from;
        edge.to = pair.to;
        std::optional<int> item;
        const Int best = best_removable_value(inst, alloc, pair.from, pair.to, &item);
        edge.removed_item = item;
        edge.residual = pair.deficit - best;
        edge.ok = edge.residual <= 0;
        report.ef1_edges.push_back(std::move(edge));
      }
      break;
    }
    case Fairness::EFX: {
      report.fair = is_efx(inst, alloc);
      for (const auto& pair : report.envy.envious_pairs) {
        bool any_positive = false;
        for (int i = 0; i < inst.num_items(); ++i) {
          if (alloc.entries[pair.to][i] < 1 || inst.utility(pair.from, i) <= 0) continue;
          any_positive = true;
          const Int residual = pair.deficit - inst.utility(pair.from, i);
          if (residual > 0)
            report.efx_violations.push_back({pair.from, pair.to, i, residual});
        }
        if (!any_positive)
          report.efx_violations.push_back({pair.from, pair.to, -1, pair.deficit});
      }
      break;
    }
  }

  const UtilityProfile p = profile_of(inst, alloc);
  auto dominator = find_dominator(inst, p, limits);
  report.efficient = !dominator.has_value();
  if (dominator) {
    report.dominator_profile = profile_of(inst, *dominator);
    report.dominator = std::move(*dominator);
  }

  if (inst.fairness() == Fairness::EF) report.induced_b = induced_b(inst, alloc);
  return report;
}

}  // namespace eef
