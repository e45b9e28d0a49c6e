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
#include <optional>
#include <vector>

#include "eef/instance.hpp"
#include "eef/model.hpp"

namespace eef {

struct EngineStats {
  std::int64_t master_solves = 0;
  std::int64_t dominator_solves = 0;
  std::int64_t probe_solves = 0;
  SolveStats solver;

  bool operator==(const EngineStats&) const = default;
};

// YES carries a certificate allocation (fair and Pareto-efficient) with its
// profile; NO carries the ordered trace of Pareto-efficient profiles whose
// recorded dominance exhausted the fair set. Stats are diagnostic and do not
// take part in equality or serialization.
struct Verdict {
  enum class Answer { Yes, No };

  Answer answer = Answer::No;
  std::optional<Allocation> certificate;
  std::optional<UtilityProfile> certificate_profile;
  std::vector<UtilityProfile> blocked_profiles;
  std::int64_t iterations = 0;
  EngineStats stats;

  bool yes() const { return answer == Answer::Yes; }

  bool operator==(const Verdict& other) const {
    return answer == other.answer && certificate == other.certificate &&
           certificate_profile == other.certificate_profile &&
           blocked_profiles == other.blocked_profiles && iterations == other.iterations;
  }
};

}  // namespace eef
