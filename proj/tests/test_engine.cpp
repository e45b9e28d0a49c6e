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

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace eef;
using test::make_allocation;
using test::make_instance;

namespace {

Instance random_small(std::mt19937_64& rng, Fairness notion, long u_lo, long u_hi) {
  const int n = static_cast<int>(test::draw(rng, 1, 3));
  const int m = static_cast<int>(test::draw(rng, 1, 3));
  std::vector<long> mult;
  for (int i = 0; i < m; ++i) mult.push_back(test::draw(rng, 0, 3));
  std::vector<std::vector<long>> util(n);
  for (auto& row : util)
    for (int i = 0; i < m; ++i) row.push_back(test::draw(rng, u_lo, u_hi));
  return make_instance(mult, util, notion);
}

}  // namespace

TEST_CASE("engine decisions on the pinned examples", "[engine]") {
  SECTION("two agents, one unit item: NO after two iterations") {
    const Verdict v = solve_eef(make_instance({1}, {{1}, {1}}));
    CHECK_FALSE(v.yes());
    CHECK(v.iterations == 2);
    REQUIRE(v.blocked_profiles.size() == 1);
    const auto& q = v.blocked_profiles[0].per_agent;
    CHECK((q == std::vector<Int>{Int(1), Int(0)} || q == std::vector<Int>{Int(0), Int(1)}));
  }
  SECTION("two agents, two unit items: YES with the balanced profile") {
    const Verdict v = solve_eef(make_instance({1, 1}, {{1, 1}, {1, 1}}));
    REQUIRE(v.yes());
    CHECK(v.certificate_profile->per_agent == std::vector<Int>{Int(1), Int(1)});
    CHECK(is_envy_free(make_instance({1, 1}, {{1, 1}, {1, 1}}), *v.certificate).envy_free());
  }
  SECTION("even and odd split of a large pile") {
    Instance even = Instance::validated({"a1", "a2"}, {{"g1", Int(1000000)}},
                                        {{Int(1)}, {Int(1)}});
    const Verdict ve = solve_eef(even);
    REQUIRE(ve.yes());
    CHECK(ve.certificate_profile->welfare == 1000000);
    CHECK(ve.certificate_profile->per_agent[0] == ve.certificate_profile->per_agent[1]);

    Instance odd = Instance::validated({"a1", "a2"}, {{"g1", Int(1000001)}},
                                       {{Int(1)}, {Int(1)}});
    const Verdict vo = solve_eef(odd);
    CHECK_FALSE(vo.yes());
    CHECK(vo.iterations == 2);
  }
  SECTION("EF1 accepts giving the single item away") {
    const Verdict v = solve_eef(make_instance({1}, {{1}, {1}}, Fairness::EF1));
    REQUIRE(v.yes());
    CHECK(v.certificate_profile->welfare == 1);
  }
}

TEST_CASE("engine matches the oracle on seeded instances", "[engine][property]") {
  std::mt19937_64 rng(7100);
  int done = 0;
  while (done < 60) {
    const Fairness notion =
        std::array{Fairness::EF, Fairness::EF1, Fairness::EFX}[done % 3];
    const Instance inst =
        random_small(rng, notion, notion == Fairness::EF ? -3 : 0, 3);
    if (count_allocations(inst) > 3000) continue;
    ++done;
    CAPTURE(done, to_string(notion));
    REQUIRE(solve_eef(inst).yes() == brute_eef(inst).verdict.yes());
  }
}

TEST_CASE("verification reports", "[engine]") {
  const Instance inst = make_instance({1}, {{1}, {1}});
  SECTION("a YES certificate replays cleanly") {
    const Instance yes_inst = make_instance({1, 1}, {{1, 1}, {1, 1}});
    const Verdict v = solve_eef(yes_inst);
    REQUIRE(v.yes());
    const VerifyReport report = verify(yes_inst, *v.certificate);
    CHECK(report.ok());
    CHECK(report.fair);
    CHECK(report.efficient);
    CHECK(report.induced_b == induced_b(yes_inst, *v.certificate));
  }
  SECTION("the empty allocation is fair but inefficient") {
    const VerifyReport report = verify(inst, Allocation::zeros(2, 1));
    CHECK(report.fair);
    CHECK_FALSE(report.efficient);
    REQUIRE(report.dominator.has_value());
    CHECK(profile_dominates(*report.dominator_profile,
                            profile_of(inst, Allocation::zeros(2, 1))));
  }
  SECTION("one item to one agent fails EF but passes EF1") {
    const Allocation alloc = make_allocation({{1}, {0}});
    const VerifyReport ef = verify(inst, alloc);
    CHECK_FALSE(ef.fair);
    REQUIRE(ef.envy.envious_pairs.size() == 1);
    CHECK(ef.envy.envious_pairs[0].from == 1);

    const VerifyReport ef1 = verify(inst.with_fairness(Fairness::EF1), alloc);
    CHECK(ef1.fair);
    REQUIRE(ef1.ef1_edges.size() == 1);
    CHECK(ef1.ef1_edges[0].ok);
    CHECK(ef1.ef1_edges[0].removed_item == 0);
    CHECK(ef1.induced_b.empty());
  }
}

TEST_CASE("NO traces block every fair allocation and stay efficient",
          "[engine][property]") {
  std::mt19937_64 rng(7200);
  int no_cases = 0;
  while (no_cases < 12) {
    const Instance inst = random_small(rng, Fairness::EF, -2, 2);
    if (count_allocations(inst) > 400) continue;
    const Verdict v = solve_eef(inst);
    if (v.yes()) continue;
    ++no_cases;
    REQUIRE(!v.blocked_profiles.empty());
    for (std::size_t i = 0; i < v.blocked_profiles.size(); ++i) {
      CHECK_FALSE(find_dominator(inst, v.blocked_profiles[i]).has_value());
      for (std::size_t j = i + 1; j < v.blocked_profiles.size(); ++j)
        CHECK_FALSE(v.blocked_profiles[i] == v.blocked_profiles[j]);
    }
    enumerate_allocations(inst, [&](const Allocation& z) {
      if (!is_envy_free(inst, z).envy_free()) return true;
      const UtilityProfile p = profile_of(inst, z);
      bool blocked = false;
      for (const auto& q : v.blocked_profiles)
        if (profile_dominates(q, p)) {
          blocked = true;
          break;
        }
      REQUIRE(blocked);
      return true;
    });
  }
}

TEST_CASE("master welfare never increases across iterations", "[engine][property]") {
  std::mt19937_64 rng(7300);
  for (int round = 0; round < 10; ++round) {
    const Instance inst = random_small(rng, Fairness::EF, -2, 2);
    AllocVarBlock block;
    IlpModel master = make_allocation_model(inst, &block);
    encode_fairness(inst, master, block);
    set_welfare_objective(inst, master, block);
    std::optional<Rat> previous;
    std::vector<UtilityProfile> recorded;
    for (int iter = 0; iter < 40; ++iter) {
      const SolveOutcome out = ilp_solve(master);
      if (out.status == SolveStatus::Infeasible) break;
      REQUIRE(out.status == SolveStatus::Optimal);
      if (previous) REQUIRE(*out.objective_value <= *previous);
      previous = out.objective_value;
      const UtilityProfile p =
          profile_of(inst, allocation_from_assignment(out.assignment, block));
      if (!find_dominator(inst, p)) break;
      const auto best = max_welfare_dominator(inst, p);
      REQUIRE(best.has_value());
      const UtilityProfile q = profile_of(inst, *best);
      for (const auto& seen : recorded) REQUIRE_FALSE(seen == q);
      add_nogood_dominance_cut(master, inst, block, q, static_cast<int>(recorded.size()));
      recorded.push_back(q);
    }
  }
}

TEST_CASE("scaling and padding preserve verdicts", "[engine][property]") {
  std::mt19937_64 rng(7400);
  int done = 0;
  while (done < 20) {
    const Fairness notion = std::array{Fairness::EF, Fairness::EF1, Fairness::EFX}[done % 3];
    const Instance inst = random_small(rng, notion, notion == Fairness::EF ? -2 : 0, 2);
    if (count_allocations(inst) > 1500) continue;
    ++done;
    const bool answer = solve_eef(inst).yes();

    const long factor = std::array<long, 3>{2, 7, 1000000}[done % 3];
    const int agent = static_cast<int>(test::draw(rng, 0, inst.num_agents() - 1));
    auto scaled_util = inst.utilities();
    for (auto& v : scaled_util[agent]) v *= factor;
    const Instance scaled = Instance::validated(inst.agents(), inst.items(), scaled_util,
                                                inst.fairness(), inst.envy_edges());
    CAPTURE(done, factor, to_string(notion));
    REQUIRE(solve_eef(scaled).yes() == answer);

    auto padded_items = inst.items();
    padded_items.push_back({"pad", Int(2)});
    auto padded_util = inst.utilities();
    for (auto& row : padded_util) row.emplace_back(0);
    const Instance padded = Instance::validated(inst.agents(), padded_items, padded_util,
                                                inst.fairness(), inst.envy_edges());
    REQUIRE(solve_eef(padded).yes() == answer);
  }
}

TEST_CASE("YES certificates survive both verifications", "[engine][property]") {
  std::mt19937_64 rng(7500);
  int yes_cases = 0;
  while (yes_cases < 15) {
    const Instance inst = random_small(rng, Fairness::EF, -2, 2);
    const Verdict v = solve_eef(inst);
    if (!v.yes()) continue;
    ++yes_cases;
    const VerifyReport report = verify(inst, *v.certificate);
    REQUIRE(report.ok());
    REQUIRE(verify_certificate(build_system(inst), induced_b(inst, *v.certificate)));
  }
}

TEST_CASE("duality against the literal sentence", "[engine][property]") {
  std::mt19937_64 rng(7600);
  int done = 0;
  while (done < 20) {
    const Instance inst = random_small(rng, Fairness::EF, -2, 2);
    if (count_allocations(inst) > 60) continue;
    ++done;
    REQUIRE(brute_pilp_sentence(inst) == !solve_eef(inst).yes());
  }
}

TEST_CASE("limits surface as errors with context", "[engine]") {
  const Instance inst = make_instance({3}, {{1}, {1}});
  SECTION("iteration cap") {
    EngineOptions options;
    options.iteration_limit = 1;
    // This instance needs two iterations (NO via one blocked profile).
    CHECK_THROWS_AS(solve_eef(make_instance({1}, {{1}, {1}}), options), LimitError);
  }
  SECTION("node cap") {
    EngineOptions options;
    options.limits.node_limit = 1;
    CHECK_THROWS_AS(solve_eef(inst, options), LimitError);
  }
}
