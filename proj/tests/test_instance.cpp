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

std::string error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("instance documents parse with arbitrary precision", "[instance]") {
  const std::string doc = R"({
    "agents": ["a1", "a2"],
    "items": [{"name": "gold", "multiplicity": "1000000000000"}],
    "utilities": [[1], [1]]
  })";
  const Instance inst = parse_instance(doc);
  CHECK(inst.num_agents() == 2);
  CHECK(inst.num_items() == 1);
  CHECK(inst.multiplicity(0) == Int("1000000000000"));
  CHECK(inst.fairness() == Fairness::EF);
  CHECK(inst.has_complete_envy_graph());
}

TEST_CASE("validation rejects exactly the stated invariants", "[instance]") {
  CHECK(error_code([] {
          parse_instance(R"({"agents":["a1","a2"],
                             "items":[{"name":"g","multiplicity":1}],
                             "utilities":[[1],[1],[1]]})");
        }) == errc::dimension_mismatch);
  CHECK(error_code([] {
          parse_instance(R"({"agents":["a1"],
                             "items":[{"name":"g","multiplicity":-2}],
                             "utilities":[[1]]})");
        }) == errc::negative_multiplicity);
  CHECK(error_code([] {
          parse_instance(R"({"agents":["a1","a2"],
                             "items":[{"name":"g","multiplicity":1}],
                             "utilities":[[-1],[1]],
                             "fairness":"EF1"})");
        }) == errc::unsupported_combination);
  CHECK(error_code([] {
          parse_instance(R"({"agents":["a1","a2"],
                             "items":[{"name":"g","multiplicity":1}],
                             "utilities":[[1],[1]],
                             "envy_graph":[[0,2]]})");
        }) == errc::invalid_envy_edge);
  CHECK(error_code([] {
          parse_instance(R"({"agents":["a1","a2"],
                             "items":[{"name":"g","multiplicity":1}],
                             "utilities":[[1],[1]],
                             "envy_graph":[[1,1]]})");
        }) == errc::invalid_envy_edge);
  CHECK(error_code([] { parse_instance("{ not json"); }) == errc::malformed_document);
  CHECK(error_code([] {
          parse_instance(R"({"agents":["a1"],
                             "items":[{"name":"g","multiplicity":1.5}],
                             "utilities":[[1]]})");
        }) == errc::malformed_document);
  CHECK(error_code([] {
          parse_instance(R"({"agents":[],
                             "items":[{"name":"g","multiplicity":1}],
                             "utilities":[]})");
        }) == errc::dimension_mismatch);

  // Accepted: negative utilities under EF, zero multiplicities, all-zero
  // utility rows, duplicate labels.
  CHECK_NOTHROW(parse_instance(R"({"agents":["a1","a1"],
                                   "items":[{"name":"g","multiplicity":0}],
                                   "utilities":[[-3],[0]]})"));
}

TEST_CASE("profiles are exact sums", "[instance]") {
  SECTION("empty bundles") {
    const Instance inst = make_instance({2, 2}, {{1, 2}, {3, 4}});
    const UtilityProfile p = profile_of(inst, Allocation::zeros(2, 2));
    CHECK(p.per_agent == std::vector<Int>{Int(0), Int(0)});
    CHECK(p.welfare == 0);
  }
  SECTION("direct sum") {
    const Instance inst = make_instance({3}, {{3}, {5}});
    const UtilityProfile p = profile_of(inst, make_allocation({{2}, {1}}));
    CHECK(p.per_agent == std::vector<Int>{Int(6), Int(5)});
    CHECK(p.welfare == 11);
  }
  SECTION("mixed signs") {
    const Instance inst = make_instance({1, 2}, {{1, -2}, {0, 4}});
    const Allocation alloc = make_allocation({{1, 1}, {0, 1}});
    // Independent recomputation, term by term.
    Int expect0 = Int(1) * 1 + Int(-2) * 1;
    Int expect1 = Int(0) * 0 + Int(4) * 1;
    const UtilityProfile p = profile_of(inst, alloc);
    CHECK(p.per_agent[0] == expect0);
    CHECK(p.per_agent[1] == expect1);
    CHECK(p.welfare == expect0 + expect1);
  }
  SECTION("huge magnitudes stay exact") {
    const Instance inst = make_instance({1}, {{1}});
    Instance big = Instance::validated({"a1"}, {{"g1", Int("1000000000000000000000")}},
                                       {{Int("999999999999999")}});
    Allocation everything{{{Int("1000000000000000000000")}}};
    const UtilityProfile p = profile_of(big, everything);
    CHECK(p.welfare == Int("1000000000000000000000") * Int("999999999999999"));
    (void)inst;
  }
}

TEST_CASE("profile errors", "[instance]") {
  const Instance inst = make_instance({1}, {{1}, {1}});
  CHECK_THROWS_AS(profile_of(inst, Allocation::zeros(3, 1)), ValidationError);
  CHECK_THROWS_AS(profile_of(inst, make_allocation({{1}, {1}})), ValidationError);
  CHECK_THROWS_AS(profile_of(inst, make_allocation({{-1}, {0}})), ValidationError);
}

TEST_CASE("profile_of is linear", "[instance][property]") {
  std::mt19937_64 rng(20260810);
  for (int round = 0; round < 50; ++round) {
    const int n = static_cast<int>(test::draw(rng, 1, 3));
    const int m = static_cast<int>(test::draw(rng, 1, 3));
    std::vector<long> mult;
    for (int i = 0; i < m; ++i) mult.push_back(test::draw(rng, 0, 4));
    std::vector<std::vector<long>> util(n);
    for (auto& row : util)
      for (int i = 0; i < m; ++i) row.push_back(test::draw(rng, -3, 3));
    const Instance inst = make_instance(mult, util);

    Allocation x = Allocation::zeros(n, m), y = Allocation::zeros(n, m);
    for (int i = 0; i < m; ++i) {
      long budget = mult[i];
      for (int a = 0; a < n; ++a) {
        const long take = test::draw(rng, 0, budget);
        const long to_x = test::draw(rng, 0, take);
        x.entries[a][i] = to_x;
        y.entries[a][i] = take - to_x;
        budget -= take;
      }
    }
    Allocation sum = Allocation::zeros(n, m);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i)
        sum.entries[a][i] = x.entries[a][i] + y.entries[a][i];

    const UtilityProfile px = profile_of(inst, x);
    const UtilityProfile py = profile_of(inst, y);
    const UtilityProfile ps = profile_of(inst, sum);
    for (int a = 0; a < n; ++a)
      REQUIRE(ps.per_agent[a] == px.per_agent[a] + py.per_agent[a]);
    REQUIRE(ps.welfare == px.welfare + py.welfare);
  }
}

TEST_CASE("instance serialization round-trips", "[instance]") {
  const std::vector<Instance> cases = {
      make_instance({1}, {{1}, {1}}),
      make_instance({2, 3}, {{-1, 4}, {0, 0}}),
      make_instance({1, 1}, {{1, 2}, {3, 4}}, Fairness::EFX),
      make_instance({5}, {{2}, {1}, {0}}, Fairness::EF, std::vector<EnvyEdge>{{0, 1}, {2, 0}}),
      Instance::validated({"x", "y"}, {{"huge", Int("123456789012345678901234567890")}},
                          {{Int(1)}, {Int("-987654321098765432109")}}),
  };
  for (const auto& inst : cases) {
    const std::string doc = serialize_instance(inst);
    const Instance back = parse_instance(doc);
    REQUIRE(back == inst);
    REQUIRE(serialize_instance(back) == doc);  // canonical form is a fixed point
  }
}

TEST_CASE("explicit envy graphs are normalized", "[instance]") {
  const Instance inst = make_instance({1}, {{1}, {1}, {1}}, Fairness::EF,
                                      std::vector<EnvyEdge>{{2, 0}, {0, 1}, {2, 0}});
  CHECK(inst.envy_edges() == std::vector<EnvyEdge>{{0, 1}, {2, 0}});
  CHECK_FALSE(inst.has_complete_envy_graph());
}

TEST_CASE("utility bounds", "[instance]") {
  const Instance inst = make_instance({2, 3}, {{-1, 4}, {2, 0}});
  CHECK(inst.utility_lower_bound(0) == -2);
  CHECK(inst.utility_upper_bound(0) == 12);
  CHECK(inst.utility_lower_bound(1) == 0);
  CHECK(inst.utility_upper_bound(1) == 4);
}
