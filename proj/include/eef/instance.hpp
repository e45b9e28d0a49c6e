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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "eef/errors.hpp"
#include "eef/numbers.hpp"

namespace eef {

enum class Fairness { EF, EF1, EFX };

inline const char* to_string(Fairness f) {
  switch (f) {
    case Fairness::EF: return "EF";
    case Fairness::EF1: return "EF1";
    case Fairness::EFX: return "EFX";
  }
  return "?";
}

inline std::optional<Fairness> fairness_from_string(std::string_view s) {
  if (s == "EF") return Fairness::EF;
  if (s == "EF1") return Fairness::EF1;
  if (s == "EFX") return Fairness::EFX;
  return std::nullopt;
}

struct ItemType {
  std::string name;
  Int multiplicity;

  bool operator==(const ItemType&) const = default;
};

// A directed "a may envy b" edge over agent indices.
using EnvyEdge = std::pair<int, int>;

// A fair-allocation problem: agents, item types with multiplicities, an
// integer utility matrix, the fairness notion to enforce, and the envy graph
// along which fairness is checked. Immutable after construction.
class Instance {
 public:
  // Validates every stated invariant; throws ValidationError otherwise.
  // An absent envy graph means the complete digraph without self-loops.
  static Instance validated(std::vector<std::string> agents, std::vector<ItemType> items,
                            std::vector<std::vector<Int>> utilities,
                            Fairness fairness = Fairness::EF,
                            std::optional<std::vector<EnvyEdge>> envy_graph = std::nullopt) {
    if (agents.empty())
      throw ValidationError(errc::dimension_mismatch, "/agents", "need at least one agent");
    if (items.empty())
      throw ValidationError(errc::dimension_mismatch, "/items", "need at least one item type");
    const int n = static_cast<int>(agents.size());
    const int m = static_cast<int>(items.size());
    if (static_cast<int>(utilities.size()) != n)
      throw ValidationError(errc::dimension_mismatch, "/utilities",
                            "expected " + std::to_string(n) + " rows, got " +
                                std::to_string(utilities.size()));
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(utilities[a].size()) != m)
        throw ValidationError(errc::dimension_mismatch, "/utilities/" + std::to_string(a),
                              "expected " + std::to_string(m) + " columns, got " +
                                  std::to_string(utilities[a].size()));
    }
    for (int i = 0; i < m; ++i) {
      if (items[i].multiplicity < 0)
        throw ValidationError(errc::negative_multiplicity,
                              "/items/" + std::to_string(i) + "/multiplicity",
                              "multiplicity must be nonnegative");
    }
    if (fairness != Fairness::EF) {
      for (int a = 0; a < n; ++a)
        for (int i = 0; i < m; ++i)
          if (utilities[a][i] < 0)
            throw ValidationError(errc::unsupported_combination,
                                  "/utilities/" + std::to_string(a) + "/" + std::to_string(i),
                                  std::string(to_string(fairness)) +
                                      " requires nonnegative utilities");
    }
    std::vector<EnvyEdge> edges;
    if (envy_graph) {
      for (std::size_t k = 0; k < envy_graph->size(); ++k) {
        auto [from, to] = (*envy_graph)[k];
        if (from < 0 || from >= n || to < 0 || to >= n)
          throw ValidationError(errc::invalid_envy_edge, "/envy_graph/" + std::to_string(k),
                                "agent index out of range");
        if (from == to)
          throw ValidationError(errc::invalid_envy_edge, "/envy_graph/" + std::to_string(k),
                                "self-loop");
      }
      edges = *envy_graph;
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    } else {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b) edges.emplace_back(a, b);
    }
    return Instance(std::move(agents), std::move(items), std::move(utilities), fairness,
                    std::move(edges));
  }

  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_items() const { return static_cast<int>(items_.size()); }

  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<ItemType>& items() const { return items_; }
  const Int& multiplicity(int i) const { return items_[i].multiplicity; }
  const std::vector<std::vector<Int>>& utilities() const { return utilities_; }
  const Int& utility(int agent, int item) const { return utilities_[agent][item]; }
  Fairness fairness() const { return fairness_; }

  // Sorted, deduplicated, self-loop free.
  const std::vector<EnvyEdge>& envy_edges() const { return envy_edges_; }

  bool has_complete_envy_graph() const {
    const std::size_t n = agents_.size();
    return envy_edges_.size() == n * (n - 1);
  }

  // Least possible total utility of an agent over valid allocations:
  // sum of m_i * min(0, u_a(i)).
  Int utility_lower_bound(int agent) const {
    Int lb = 0;
    for (int i = 0; i < num_items(); ++i)
      if (utilities_[agent][i] < 0) lb += multiplicity(i) * utilities_[agent][i];
    return lb;
  }

  // Greatest possible total utility: sum of m_i * max(0, u_a(i)).
  Int utility_upper_bound(int agent) const {
    Int ub = 0;
    for (int i = 0; i < num_items(); ++i)
      if (utilities_[agent][i] > 0) ub += multiplicity(i) * utilities_[agent][i];
    return ub;
  }

  Instance with_fairness(Fairness f) const {
    return validated(agents_, items_, utilities_, f, envy_edges_);
  }

  bool operator==(const Instance&) const = default;

 private:
  Instance(std::vector<std::string> agents, std::vector<ItemType> items,
           std::vector<std::vector<Int>> utilities, Fairness fairness,
           std::vector<EnvyEdge> envy_edges)
      : agents_(std::move(agents)),
        items_(std::move(items)),
        utilities_(std::move(utilities)),
        fairness_(fairness),
        envy_edges_(std::move(envy_edges)) {}

  std::vector<std::string> agents_;
  std::vector<ItemType> items_;
  std::vector<std::vector<Int>> utilities_;
  Fairness fairness_;
  std::vector<EnvyEdge> envy_edges_;
};

// How many copies of each item type each agent receives. Copies may remain
// unallocated; per item type the column sum never exceeds the multiplicity.
struct Allocation {
  std::vector<std::vector<Int>> entries;  // entries[agent][item]

  int num_agents() const { return static_cast<int>(entries.size()); }
  int num_items() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
  const Int& at(int agent, int item) const { return entries[agent][item]; }

  static Allocation zeros(int n, int m) {
    return Allocation{std::vector<std::vector<Int>>(n, std::vector<Int>(m, Int(0)))};
  }

  bool operator==(const Allocation&) const = default;
};

// Per-agent total utilities plus their sum.
struct UtilityProfile {
  std::vector<Int> per_agent;
  Int welfare;

  bool operator==(const UtilityProfile&) const = default;
  bool operator<(const UtilityProfile& other) const {
    return per_agent < other.per_agent;
  }
};

inline void validate_allocation(const Instance& inst, const Allocation& alloc) {
  const int n = inst.num_agents();
  const int m = inst.num_items();
  if (alloc.num_agents() != n)
    throw ValidationError(errc::invalid_allocation, "/allocation",
                          "expected " + std::to_string(n) + " rows");
  for (int a = 0; a < n; ++a)
    if (static_cast<int>(alloc.entries[a].size()) != m)
      throw ValidationError(errc::invalid_allocation, "/allocation/" + std::to_string(a),
                            "expected " + std::to_string(m) + " columns");
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i)
      if (alloc.entries[a][i] < 0)
        throw ValidationError(errc::invalid_allocation,
                              "/allocation/" + std::to_string(a) + "/" + std::to_string(i),
                              "negative entry");
  for (int i = 0; i < m; ++i) {
    Int used = 0;
    for (int a = 0; a < n; ++a) used += alloc.entries[a][i];
    if (used > inst.multiplicity(i))
      throw ValidationError(errc::invalid_allocation, "/allocation",
                            "item type " + std::to_string(i) + " over-allocated: " +
                                to_decimal(used) + " > " + to_decimal(inst.multiplicity(i)));
  }
}

// Value of agent `viewer`'s utilities applied to `owner`'s bundle.
inline Int bundle_value(const Instance& inst, const Allocation& alloc, int viewer, int owner) {
  Int v = 0;
  for (int i = 0; i < inst.num_items(); ++i)
    v += inst.utility(viewer, i) * alloc.entries[owner][i];
  return v;
}

inline UtilityProfile profile_of(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  UtilityProfile p;
  p.per_agent.reserve(inst.num_agents());
  p.welfare = 0;
  for (int a = 0; a < inst.num_agents(); ++a) {
    p.per_agent.push_back(bundle_value(inst, alloc, a, a));
    p.welfare += p.per_agent.back();
  }
  return p;
}

}  // namespace eef
