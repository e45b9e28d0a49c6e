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

#include <stdexcept>
#include <string>
#include <utility>

#include "eef/numbers.hpp"

namespace eef {

// Input rejected by validation. `code` is a stable machine-readable
// identifier; `location` points at the offending document element
// (JSON-pointer style, empty when not applicable).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, std::string location, const std::string& message)
      : std::runtime_error(location.empty() ? code + ": " + message
                                            : code + " at " + location + ": " + message),
        code_(std::move(code)),
        location_(std::move(location)) {}

  const std::string& code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  std::string code_;
  std::string location_;
};

// Stable validation codes.
namespace errc {
inline constexpr const char* malformed_document = "malformed_document";
inline constexpr const char* dimension_mismatch = "dimension_mismatch";
inline constexpr const char* negative_multiplicity = "negative_multiplicity";
inline constexpr const char* unsupported_combination = "unsupported_combination";
inline constexpr const char* invalid_envy_edge = "invalid_envy_edge";
inline constexpr const char* invalid_allocation = "invalid_allocation";
inline constexpr const char* invalid_model = "invalid_model";
inline constexpr const char* invalid_certificate = "invalid_certificate";
inline constexpr const char* invalid_range = "invalid_range";
}  // namespace errc

// A configured resource budget was exhausted before a decision was reached.
// Never a wrong answer: callers see this instead of a guess.
class LimitError : public std::runtime_error {
 public:
  LimitError(std::string kind, const std::string& message)
      : std::runtime_error(kind + " limit exceeded: " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Enumeration refused because the allocation count exceeds the cap.
class CapExceeded : public LimitError {
 public:
  CapExceeded(Int count, const Int& cap)
      : LimitError("enumeration",
                   to_decimal(count) + " allocations exceed cap " + to_decimal(cap)),
        count_(std::move(count)) {}

  const Int& count() const { return count_; }

 private:
  Int count_;
};

}  // namespace eef
