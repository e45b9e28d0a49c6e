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

#include <string>
#include <vector>

#include "eef/instance.hpp"
#include "eef/model.hpp"

namespace eef {

// Locates the n x m block of allocation variables inside a model. Entry
// (agent a, item i) lives at column first + a*m + i.
struct AllocVarBlock {
  std::size_t first = 0;
  int n = 0;
  int m = 0;

  std::size_t index(int agent, int item) const {
    return first + static_cast<std::size_t>(agent) * m + item;
  }
};

// Fresh model over the allocation block: integer variables x{a}_{i} in
// [0, m_i] plus one capacity row per item type.
inline IlpModel make_allocation_model(const Instance& inst, AllocVarBlock* block_out = nullptr) {
  IlpModel model;
  const int n = inst.num_agents();
  const int m = inst.num_items();
  AllocVarBlock block{0, n, m};
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i)
      model.add_variable("x" + std::to_string(a) + "_" + std::to_string(i), Rat(0),
                         Rat(inst.multiplicity(i)), /*integral=*/true);
  for (int i = 0; i < m; ++i) {
    auto row = model.zero_row();
    for (int a = 0; a < n; ++a) row[block.index(a, i)] = Rat(1);
    model.add_constraint("cap" + std::to_string(i), std::move(row), Relation::LessEq,
                         Rat(inst.multiplicity(i)));
  }
  if (block_out) *block_out = block;
  return model;
}

// Appends "maximize total welfare" over the allocation block.
inline void set_welfare_objective(const Instance& inst, IlpModel& model,
                                  const AllocVarBlock& block) {
  Objective obj;
  obj.direction = Direction::Maximize;
  obj.coefficients = model.zero_row();
  for (int a = 0; a < block.n; ++a)
    for (int i = 0; i < block.m; ++i)
      obj.coefficients[block.index(a, i)] = Rat(inst.utility(a, i));
  model.objective = std::move(obj);
}

inline Allocation allocation_from_assignment(const std::vector<Rat>& assignment,
                                             const AllocVarBlock& block) {
  Allocation alloc = Allocation::zeros(block.n, block.m);
  for (int a = 0; a < block.n; ++a)
    for (int i = 0; i < block.m; ++i) {
      const Rat& v = assignment[block.index(a, i)];
      alloc.entries[a][i] = v.get_num();  // integral by construction
    }
  return alloc;
}

}  // namespace eef
