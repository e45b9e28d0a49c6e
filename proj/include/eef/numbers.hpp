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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eef {

// Arbitrary-precision integer and rational. Every quantity in this library is
// one of these two; there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// An absent bound; used for half-open variable domains.
using MaybeRat = std::optional<Rat>;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Number of bits of |v|; zero for v == 0.
inline std::size_t bit_length(const Int& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// Strict decimal integer syntax: optional minus sign, then digits.
inline bool is_decimal_string(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::optional<Int> parse_decimal(std::string_view s) {
  if (!is_decimal_string(s)) return std::nullopt;
  return Int(std::string(s), 10);
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

// "p/q" in lowest terms, or plain "p" for integers.
inline std::string to_decimal(const Rat& q) { return q.get_str(10); }

// Strict rational syntax: decimal integer, optionally followed by "/" and a
// positive decimal integer.
inline std::optional<Rat> parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_decimal(s);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto num = parse_decimal(s.substr(0, slash));
  auto den = parse_decimal(s.substr(slash + 1));
  if (!num || !den || *den <= 0) return std::nullopt;
  Rat q(*num, *den);
  q.canonicalize();
  return q;
}

inline const Int& max_int(const Int& a, const Int& b) { return a < b ? b : a; }
inline const Int& min_int(const Int& a, const Int& b) { return a < b ? a : b; }

}  // namespace eef
