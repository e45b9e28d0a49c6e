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

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "eef/fairness.hpp"
#include "eef/instance.hpp"
#include "eef/pilp.hpp"
#include "eef/verdict.hpp"

namespace eef {

// Ground truth by exhaustion. Deliberately simple: fairness goes through the
// predicate functions (not the encoders) and efficiency through pairwise
// profile comparison, so the oracle shares no solving path with the engine.

inline Int count_allocations(const Instance& inst) {
  Int total = 1;
  for (int i = 0; i < inst.num_items(); ++i)
    total *= binomial(inst.multiplicity(i) + inst.num_agents(),
                      static_cast<unsigned long>(inst.num_agents()));
  return total;
}

namespace detail {

// Positions advance item-major: item 0 across all agents, then item 1, and
// so on; values count up from zero. The resulting stream is lexicographic
// over the item-major flattening.
template <typename Fn>
bool enumerate_from(const Instance& inst, int pos, std::vector<Int>& remaining,
                    Allocation& current, Fn&& fn) {
  const int n = inst.num_agents();
  const int m = inst.num_items();
  if (pos == n * m) return fn(std::as_const(current));
  const int item = pos / n;
  const int agent = pos % n;
  const Int limit = remaining[item];
  for (Int v = 0; v <= limit; ++v) {
    current.entries[agent][item] = v;
    remaining[item] = limit - v;
    if (!enumerate_from(inst, pos + 1, remaining, current, fn)) {
      current.entries[agent][item] = 0;
      remaining[item] = limit;
      return false;
    }
  }
  current.entries[agent][item] = 0;
  remaining[item] = limit;
  return true;
}

inline std::vector<Int> multiplicities(const Instance& inst) {
  std::vector<Int> rem;
  rem.reserve(inst.num_items());
  for (int i = 0; i < inst.num_items(); ++i) rem.push_back(inst.multiplicity(i));
  return rem;
}

inline std::vector<Int> item_major_key(const Allocation& alloc) {
  std::vector<Int> key;
  key.reserve(static_cast<std::size_t>(alloc.num_agents()) * alloc.num_items());
  for (int i = 0; i < alloc.num_items(); ++i)
    for (int a = 0; a < alloc.num_agents(); ++a) key.push_back(alloc.entries[a][i]);
  return key;
}

// Restricts the stream to allocations whose item-0 column has ordinal
// `worker` modulo `jobs`; ordinals follow the same lexicographic order, so a
// fixed partition of the stream results.
template <typename Fn>
bool enumerate_partition(const Instance& inst, int worker, int jobs, Fn&& fn) {
  const int n = inst.num_agents();
  Allocation current = Allocation::zeros(n, inst.num_items());
  std::vector<Int> remaining = multiplicities(inst);
  long long ordinal = 0;

  const std::function<bool(int)> first_column = [&](int agent) -> bool {
    if (agent == n) {
      const bool mine = (ordinal % jobs) == worker;
      ++ordinal;
      if (!mine) return true;
      return enumerate_from(inst, n, remaining, current, fn);
    }
    const Int limit = remaining[0];
    for (Int v = 0; v <= limit; ++v) {
      current.entries[agent][0] = v;
      remaining[0] = limit - v;
      if (!first_column(agent + 1)) {
        current.entries[agent][0] = 0;
        remaining[0] = limit;
        return false;
      }
    }
    current.entries[agent][0] = 0;
    remaining[0] = limit;
    return true;
  };
  return first_column(0);
}

}  // namespace detail

// Calls fn for every valid allocation in lexicographic (item-major) order.
// fn returns false to stop early. Throws CapExceeded (with the exact count)
// when the stream would be longer than `cap`.
template <typename Fn>
bool enumerate_allocations(const Instance& inst, Fn&& fn,
                           const Int& cap = Int(10'000'000)) {
  const Int total = count_allocations(inst);
  if (total > cap) throw CapExceeded(total, cap);
  Allocation current = Allocation::zeros(inst.num_agents(), inst.num_items());
  std::vector<Int> remaining = detail::multiplicities(inst);
  return detail::enumerate_from(inst, 0, remaining, current, fn);
}

struct Census {
  Int allocations;
  Int fair;
  Int pareto;
  Int intersection;
};

struct BruteResult {
  Verdict verdict;
  Census census;
};

struct BruteOptions {
  Int cap = Int(10'000'000);
  int jobs = 1;
};

// Exhaustive decision: the fair set and the Pareto-efficient set are built
// outright and intersected; YES comes with the lexicographically first
// member of the intersection. Enumeration may be partitioned over worker
// threads on the first item type's column; results merge deterministically.
inline BruteResult brute_eef(const Instance& inst, const BruteOptions& options = {}) {
  const Int total = count_allocations(inst);
  if (total > options.cap) throw CapExceeded(total, options.cap);
  const int jobs = options.jobs < 1 ? 1 : options.jobs;

  using ProfileKey = std::vector<Int>;

  // Pass 1: distinct profiles with allocation counts.
  std::vector<std::map<ProfileKey, Int>> profile_counts(jobs);
  auto pass1 = [&](int worker) {
    auto& local = profile_counts[worker];
    detail::enumerate_partition(inst, worker, jobs, [&](const Allocation& alloc) {
      local[profile_of(inst, alloc).per_agent] += 1;
      return true;
    });
  };
  if (jobs == 1) {
    pass1(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(pass1, w);
    for (auto& t : threads) t.join();
  }
  std::map<ProfileKey, Int> profiles;
  for (auto& local : profile_counts)
    for (auto& [key, count] : local) profiles[key] += count;

  auto dominates = [](const ProfileKey& x, const ProfileKey& z) {
    bool strict = false;
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (x[a] < z[a]) return false;
      if (x[a] > z[a]) strict = true;
    }
    return strict;
  };

  std::set<ProfileKey> maximal;
  Int pareto_count = 0;
  for (const auto& [p, count] : profiles) {
    bool dominated = false;
    for (const auto& [q, qcount] : profiles)
      if (dominates(q, p)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      maximal.insert(p);
      pareto_count += count;
    }
  }

  // Pass 2: fair census and the first fair allocation with a maximal profile.
  struct Pass2 {
    Int fair = 0;
    Int intersection = 0;
    std::set<ProfileKey> fair_profiles;
    std::optional<Allocation> witness;
  };
  std::vector<Pass2> pass2(jobs);
  auto run2 = [&](int worker) {
    auto& local = pass2[worker];
    detail::enumerate_partition(inst, worker, jobs, [&](const Allocation& alloc) {
      if (!fairness_holds(inst, alloc)) return true;
      local.fair += 1;
      const ProfileKey key = profile_of(inst, alloc).per_agent;
      local.fair_profiles.insert(key);
      if (maximal.count(key)) {
        local.intersection += 1;
        if (!local.witness) local.witness = alloc;
      }
      return true;
    });
  };
  if (jobs == 1) {
    run2(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(run2, w);
    for (auto& t : threads) t.join();
  }

  Census census{total, Int(0), pareto_count, Int(0)};
  std::set<ProfileKey> fair_profiles;
  std::optional<Allocation> witness;
  std::vector<Int> witness_key;
  for (auto& local : pass2) {
    census.fair += local.fair;
    census.intersection += local.intersection;
    fair_profiles.insert(local.fair_profiles.begin(), local.fair_profiles.end());
    if (local.witness) {
      auto key = detail::item_major_key(*local.witness);
      if (!witness || key < witness_key) {
        witness = std::move(local.witness);
        witness_key = std::move(key);
      }
    }
  }

  BruteResult result;
  result.census = std::move(census);
  if (witness) {
    result.verdict.answer = Verdict::Answer::Yes;
    result.verdict.certificate_profile = profile_of(inst, *witness);
    result.verdict.certificate = std::move(*witness);
  } else {
    result.verdict.answer = Verdict::Answer::No;
    for (const auto& q : maximal) {
      bool blocks = false;
      for (const auto& p : fair_profiles)
        if (dominates(q, p)) {
          blocks = true;
          break;
        }
      if (!blocks) continue;
      UtilityProfile profile;
      profile.per_agent = q;
      profile.welfare = 0;
      for (const auto& v : q) profile.welfare += v;
      result.verdict.blocked_profiles.push_back(std::move(profile));
    }
  }
  return result;
}

// Literal evaluation of "for every b in the integer projection of Q there is
// an integral x with A x <= b": every envy-free allocation induces its b,
// and the inner search for x scans the valid allocations against A row by
// row. Requires an EF instance.
inline bool brute_pilp_sentence(const Instance& inst, const Int& cap = Int(10'000'000)) {
  const PilpSystem sys = build_system(inst);
  bool sentence_holds = true;
  enumerate_allocations(
      inst,
      [&](const Allocation& z) {
        if (!is_envy_free(inst, z).envy_free()) return true;
        const std::vector<Rat> b = induced_b(inst, z);
        bool found = false;
        enumerate_allocations(
            inst,
            [&](const Allocation& x) {
              std::vector<Rat> flat;
              flat.reserve(sys.num_cols());
              for (int a = 0; a < inst.num_agents(); ++a)
                for (int i = 0; i < inst.num_items(); ++i) flat.emplace_back(x.entries[a][i]);
              for (std::size_t r = 0; r < sys.num_rows(); ++r) {
                Rat lhs(0);
                for (std::size_t c = 0; c < flat.size(); ++c)
                  if (sys.a_rows[r][c] != 0) lhs += sys.a_rows[r][c] * flat[c];
                if (lhs > b[r]) return true;  // row violated, keep scanning
              }
              found = true;
              return false;
            },
            cap);
        if (!found) {
          sentence_holds = false;
          return false;
        }
        return true;
      },
      cap);
  return sentence_holds;
}

}  // namespace eef
