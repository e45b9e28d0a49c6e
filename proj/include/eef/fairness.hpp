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

namespace eef {

// One envious pair: agent `from` values `to`'s bundle `deficit` more than
// her own. Empty list == envy-free along the instance's envy graph.
struct EnvyReport {
  struct Pair {
    int from;
    int to;
    Int deficit;
    bool operator==(const Pair&) const = default;
  };
  std::vector<Pair> envious_pairs;

  bool envy_free() const { return envious_pairs.empty(); }
  bool operator==(const EnvyReport&) const = default;
};

inline EnvyReport is_envy_free(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  EnvyReport report;
  for (const auto& [a, b] : inst.envy_edges()) {
    const Int own = bundle_value(inst, alloc, a, a);
    const Int other = bundle_value(inst, alloc, a, b);
    if (own < other) report.envious_pairs.push_back({a, b, other - own});
  }
  return report;
}

inline void require_nonnegative_utilities(const Instance& inst, const char* what) {
  for (int a = 0; a < inst.num_agents(); ++a)
    for (int i = 0; i < inst.num_items(); ++i)
      if (inst.utility(a, i) < 0)
        throw ValidationError(errc::unsupported_combination,
                              "/utilities/" + std::to_string(a) + "/" + std::to_string(i),
                              std::string(what) + " requires nonnegative utilities");
}

// Value of the most valuable item type (through `viewer`'s utilities)
// present in `owner`'s bundle; zero for an empty bundle.
inline Int best_removable_value(const Instance& inst, const Allocation& alloc, int viewer,
                                int owner, std::optional<int>* item_out = nullptr) {
  Int best = 0;
  std::optional<int> best_item;
  for (int i = 0; i < inst.num_items(); ++i) {
    if (alloc.entries[owner][i] < 1) continue;
    if (!best_item || inst.utility(viewer, i) > best) {
      best = inst.utility(viewer, i);
      best_item = i;
    }
  }
  if (item_out) *item_out = best_item;
  return best;
}

// Envy-free up to one good: along every envy edge, dropping one copy of the
// most valuable present item type kills the envy.
inline bool is_ef1(const Instance& inst, const Allocation& alloc) {
  require_nonnegative_utilities(inst, "EF1");
  validate_allocation(inst, alloc);
  for (const auto& [a, b] : inst.envy_edges()) {
    const Int own = bundle_value(inst, alloc, a, a);
    const Int other = bundle_value(inst, alloc, a, b);
    if (own >= other) continue;
    if (own < other - best_removable_value(inst, alloc, a, b)) return false;
  }
  return true;
}

// Envy-free up to any good: along every envy edge, dropping one copy of any
// positively-valued present item type kills the envy. An edge whose target
// bundle holds no positively-valued item falls back to plain non-envy.
inline bool is_efx(const Instance& inst, const Allocation& alloc) {
  require_nonnegative_utilities(inst, "EFX");
  validate_allocation(inst, alloc);
  for (const auto& [a, b] : inst.envy_edges()) {
    const Int own = bundle_value(inst, alloc, a, a);
    const Int other = bundle_value(inst, alloc, a, b);
    bool any_positive = false;
    for (int i = 0; i < inst.num_items(); ++i) {
      if (alloc.entries[b][i] < 1 || inst.utility(a, i) <= 0) continue;
      any_positive = true;
      if (own < other - inst.utility(a, i)) return false;
    }
    if (!any_positive && own < other) return false;
  }
  return true;
}

inline bool fairness_holds(const Instance& inst, const Allocation& alloc) {
  switch (inst.fairness()) {
    case Fairness::EF: return is_envy_free(inst, alloc).envy_free();
    case Fairness::EF1: return is_ef1(inst, alloc);
    case Fairness::EFX: return is_efx(inst, alloc);
  }
  return false;
}

namespace detail {

inline void encode_ef(const Instance& inst, IlpModel& model, const AllocVarBlock& block) {
  std::size_t e = 0;
  for (const auto& [a, b] : inst.envy_edges()) {
    auto row = model.zero_row();
    for (int i = 0; i < inst.num_items(); ++i) {
      row[block.index(a, i)] += Rat(inst.utility(a, i));
      row[block.index(b, i)] -= Rat(inst.utility(a, i));
    }
    model.add_constraint("ef" + std::to_string(e++), std::move(row), Relation::GreaterEq,
                         Rat(0));
  }
}

// Disjunction over the removable item type: at most one selector picks an
// item that must be present in the envied bundle, and the envy inequality is
// relaxed by exactly that item's value. No selector chosen means plain
// non-envy, which also covers empty envied bundles.
inline void encode_ef1(const Instance& inst, IlpModel& model, const AllocVarBlock& block) {
  std::size_t e = 0;
  for (const auto& [a, b] : inst.envy_edges()) {
    const std::string tag = std::to_string(e);
    std::vector<std::pair<int, std::size_t>> sel;  // (item, column)
    for (int i = 0; i < inst.num_items(); ++i) {
      if (inst.utility(a, i) <= 0 || inst.multiplicity(i) < 1) continue;
      sel.emplace_back(i, model.add_variable("s" + tag + "_" + std::to_string(i), Rat(0),
                                             Rat(1), /*integral=*/true));
    }
    auto main = model.zero_row();
    for (int i = 0; i < inst.num_items(); ++i) {
      main[block.index(a, i)] += Rat(inst.utility(a, i));
      main[block.index(b, i)] -= Rat(inst.utility(a, i));
    }
    for (const auto& [i, col] : sel) main[col] = Rat(inst.utility(a, i));
    model.add_constraint("ef1_" + tag, std::move(main), Relation::GreaterEq, Rat(0));
    for (const auto& [i, col] : sel) {
      auto row = model.zero_row();
      row[block.index(b, i)] = Rat(1);
      row[col] = Rat(-1);
      model.add_constraint("ef1mem" + tag + "_" + std::to_string(i), std::move(row),
                           Relation::GreaterEq, Rat(0));
    }
    if (!sel.empty()) {
      auto row = model.zero_row();
      for (const auto& [i, col] : sel) row[col] = Rat(1);
      model.add_constraint("ef1one" + tag, std::move(row), Relation::LessEq, Rat(1));
    }
    ++e;
  }
}

// One indicator per (edge, positively-valued item): presence of the item in
// the envied bundle forces the indicator, which activates the removal
// inequality for that item. Activation constants from exact utility bounds.
inline void encode_efx(const Instance& inst, IlpModel& model, const AllocVarBlock& block) {
  std::size_t e = 0;
  for (const auto& [a, b] : inst.envy_edges()) {
    const std::string tag = std::to_string(e);
    const Int big = inst.utility_upper_bound(a) - inst.utility_lower_bound(a) + 1;
    for (int i = 0; i < inst.num_items(); ++i) {
      if (inst.utility(a, i) <= 0 || inst.multiplicity(i) < 1) continue;
      const std::size_t w = model.add_variable("w" + tag + "_" + std::to_string(i), Rat(0),
                                               Rat(1), /*integral=*/true);
      {
        auto row = model.zero_row();
        row[w] = Rat(inst.multiplicity(i));
        row[block.index(b, i)] = Rat(-1);
        model.add_constraint("efxlink" + tag + "_" + std::to_string(i), std::move(row),
                             Relation::GreaterEq, Rat(0));
      }
      {
        auto row = model.zero_row();
        for (int k = 0; k < inst.num_items(); ++k) {
          row[block.index(a, k)] += Rat(inst.utility(a, k));
          row[block.index(b, k)] -= Rat(inst.utility(a, k));
        }
        row[w] = Rat(-big);
        model.add_constraint("efx" + tag + "_" + std::to_string(i), std::move(row),
                             Relation::GreaterEq, Rat(-inst.utility(a, i) - big));
      }
    }
    ++e;
  }
}

}  // namespace detail

// Appends constraints (and any selector variables) whose integer solutions,
// projected to the allocation block, are exactly the allocations satisfying
// the instance's fairness notion along its envy graph.
inline void encode_fairness(const Instance& inst, IlpModel& model, const AllocVarBlock& block) {
  switch (inst.fairness()) {
    case Fairness::EF:
      detail::encode_ef(inst, model, block);
      break;
    case Fairness::EF1:
      require_nonnegative_utilities(inst, "EF1");
      detail::encode_ef1(inst, model, block);
      break;
    case Fairness::EFX:
      require_nonnegative_utilities(inst, "EFX");
      detail::encode_efx(inst, model, block);
      break;
  }
}

}  // namespace eef
