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
#include <random>
#include <string>
#include <vector>

#include "eef/errors.hpp"
#include "eef/instance.hpp"

namespace eef {

struct GenParams {
  int agents = 2;
  int items = 2;
  Int mult_lo = 1, mult_hi = 1;
  Int util_lo = 0, util_hi = 1;
  Fairness fairness = Fairness::EF;
};

namespace detail {

// Uniform draw from [0, span) off a fixed-width word stream: enough 64-bit
// words to cover the span, reduced modulo span. The reduction is part of the
// documented algorithm; determinism across platforms is the contract here,
// exact uniformity is not.
inline Int draw_below(std::mt19937_64& rng, const Int& span) {
  const std::size_t words = (bit_length(span) + 63) / 64 + 1;
  Int value = 0;
  for (std::size_t w = 0; w < words; ++w) {
    value <<= 64;
    const std::uint64_t word = rng();
    Int chunk;
    mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    value += chunk;
  }
  return value % span;
}

inline Int draw_range(std::mt19937_64& rng, const Int& lo, const Int& hi) {
  return lo + draw_below(rng, hi - lo + 1);
}

}  // namespace detail

// Deterministic pseudo-random instance: a seeded mt19937_64 with a fixed
// draw order — item multiplicities first, then the utility matrix row by
// row. Agents are labeled a1..aN, item types g1..gM.
inline Instance random_instance(const GenParams& params, std::uint64_t seed) {
  if (params.agents < 1 || params.items < 1)
    throw ValidationError(errc::invalid_range, "", "need at least one agent and one item type");
  if (params.mult_lo > params.mult_hi || params.mult_lo < 0)
    throw ValidationError(errc::invalid_range, "",
                          "multiplicity range must be nonnegative and ordered");
  if (params.util_lo > params.util_hi)
    throw ValidationError(errc::invalid_range, "", "utility range must be ordered");
  if (params.fairness != Fairness::EF && params.util_lo < 0)
    throw ValidationError(errc::unsupported_combination, "",
                          std::string(to_string(params.fairness)) +
                              " requires a nonnegative utility range");

  std::mt19937_64 rng(seed);
  std::vector<std::string> agents;
  for (int a = 1; a <= params.agents; ++a) agents.push_back("a" + std::to_string(a));
  std::vector<ItemType> items;
  for (int i = 1; i <= params.items; ++i)
    items.push_back({"g" + std::to_string(i),
                     detail::draw_range(rng, params.mult_lo, params.mult_hi)});
  std::vector<std::vector<Int>> utilities(params.agents);
  for (int a = 0; a < params.agents; ++a)
    for (int i = 0; i < params.items; ++i)
      utilities[a].push_back(detail::draw_range(rng, params.util_lo, params.util_hi));
  return Instance::validated(std::move(agents), std::move(items), std::move(utilities),
                             params.fairness);
}

}  // namespace eef
