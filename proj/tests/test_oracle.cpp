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

std::vector<Int> item_major(const Allocation& alloc) {
  std::vector<Int> key;
  for (int i = 0; i < alloc.num_items(); ++i)
    for (int a = 0; a < alloc.num_agents(); ++a) key.push_back(alloc.entries[a][i]);
  return key;
}

}  // namespace

TEST_CASE("allocation counts", "[oracle]") {
  CHECK(count_allocations(make_instance({1}, {{1}, {1}})) == 3);
  CHECK(count_allocations(make_instance({1, 1}, {{1, 1}, {1, 1}})) == 9);
  // Compositions of at most two copies into three agents.
  CHECK(count_allocations(make_instance({2}, {{1}, {1}, {1}})) == 10);
}

TEST_CASE("the stream is lexicographic and matches the count formula",
          "[oracle][property]") {
  std::mt19937_64 rng(500);
  for (int round = 0; round < 20; ++round) {
    const int n = static_cast<int>(test::draw(rng, 1, 3));
    const int m = static_cast<int>(test::draw(rng, 1, 3));
    std::vector<long> mult;
    for (int i = 0; i < m; ++i) mult.push_back(test::draw(rng, 0, 3));
    std::vector<std::vector<long>> util(n);
    for (auto& row : util)
      for (int i = 0; i < m; ++i) row.push_back(test::draw(rng, 0, 1));
    const Instance inst = make_instance(mult, util);
    if (count_allocations(inst) > 2000) continue;

    Int seen = 0;
    std::optional<std::vector<Int>> previous;
    enumerate_allocations(inst, [&](const Allocation& alloc) {
      seen += 1;
      auto key = item_major(alloc);
      if (previous) REQUIRE(*previous < key);
      previous = std::move(key);
      return true;
    });
    REQUIRE(seen == count_allocations(inst));
  }
}

TEST_CASE("enumeration starts from the empty allocation and can stop early", "[oracle]") {
  const Instance inst = make_instance({2, 1}, {{1, 1}, {1, 1}});
  int calls = 0;
  enumerate_allocations(inst, [&](const Allocation& alloc) {
    ++calls;
    CHECK(alloc == Allocation::zeros(2, 2));
    return false;
  });
  CHECK(calls == 1);
}

TEST_CASE("the cap is enforced with the exact count", "[oracle]") {
  const Instance inst = make_instance({1000000000}, {{1}, {1}});
  try {
    enumerate_allocations(inst, [](const Allocation&) { return true; });
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.count() == binomial(Int(1000000002), 2));
  }
}

TEST_CASE("exhaustive decisions", "[oracle]") {
  SECTION("two agents, one unit item: no fair efficient allocation") {
    const BruteResult r = brute_eef(make_instance({1}, {{1}, {1}}));
    CHECK_FALSE(r.verdict.yes());
    CHECK(r.census.allocations == 3);
    CHECK(r.census.fair == 1);
    CHECK(r.census.pareto == 2);
    CHECK(r.census.intersection == 0);
    REQUIRE(r.verdict.blocked_profiles.size() == 2);  // both efficient profiles block
  }
  SECTION("two agents, two unit items: both diagonals qualify") {
    const BruteResult r = brute_eef(make_instance({1, 1}, {{1, 1}, {1, 1}}));
    CHECK(r.verdict.yes());
    CHECK(r.census.intersection >= 2);
    // Lexicographically first witness in item-major order.
    CHECK(*r.verdict.certificate == make_allocation({{0, 1}, {1, 0}}));
    CHECK(r.verdict.certificate_profile->welfare == 2);
  }
  SECTION("a single agent always has a fair efficient allocation") {
    const BruteResult r = brute_eef(make_instance({3}, {{-1}}));
    CHECK(r.verdict.yes());
    CHECK(r.verdict.certificate_profile->welfare == 0);  // free disposal
  }
}

TEST_CASE("sentence evaluation by double enumeration", "[oracle]") {
  CHECK(brute_pilp_sentence(make_instance({1}, {{1}, {1}})));
  CHECK_FALSE(brute_pilp_sentence(make_instance({1, 1}, {{1, 1}, {1, 1}})));
  CHECK_FALSE(brute_pilp_sentence(make_instance({2}, {{1}})));
}

TEST_CASE("sentence is the negation of existence", "[oracle][property]") {
  std::mt19937_64 rng(501);
  int done = 0;
  while (done < 25) {
    const int n = static_cast<int>(test::draw(rng, 1, 3));
    const int m = static_cast<int>(test::draw(rng, 1, 2));
    std::vector<long> mult;
    for (int i = 0; i < m; ++i) mult.push_back(test::draw(rng, 0, 2));
    std::vector<std::vector<long>> util(n);
    for (auto& row : util)
      for (int i = 0; i < m; ++i) row.push_back(test::draw(rng, -2, 2));
    const Instance inst = make_instance(mult, util);
    if (count_allocations(inst) > 60) continue;
    ++done;
    CAPTURE(done);
    REQUIRE(brute_pilp_sentence(inst) == !brute_eef(inst).verdict.yes());
  }
}

TEST_CASE("worker partitioning changes nothing", "[oracle]") {
  std::mt19937_64 rng(502);
  for (int round = 0; round < 8; ++round) {
    const int n = static_cast<int>(test::draw(rng, 2, 3));
    const int m = static_cast<int>(test::draw(rng, 1, 3));
    std::vector<long> mult;
    for (int i = 0; i < m; ++i) mult.push_back(test::draw(rng, 1, 3));
    std::vector<std::vector<long>> util(n);
    for (auto& row : util)
      for (int i = 0; i < m; ++i) row.push_back(test::draw(rng, 0, 3));
    const Fairness notion =
        std::array{Fairness::EF, Fairness::EF1, Fairness::EFX}[round % 3];
    const Instance inst = make_instance(mult, util, notion);

    const BruteResult sequential = brute_eef(inst);
    for (int jobs : {2, 3, 5}) {
      BruteOptions options;
      options.jobs = jobs;
      const BruteResult parallel = brute_eef(inst, options);
      REQUIRE(parallel.verdict == sequential.verdict);
      REQUIRE(parallel.census.allocations == sequential.census.allocations);
      REQUIRE(parallel.census.fair == sequential.census.fair);
      REQUIRE(parallel.census.pareto == sequential.census.pareto);
      REQUIRE(parallel.census.intersection == sequential.census.intersection);
    }
  }
}
