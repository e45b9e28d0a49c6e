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

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eef/errors.hpp"
#include "eef/model.hpp"

namespace eef {

// Plain-text model format. Canonical emission: nonzero terms in variable
// order, rationals in lowest terms, one BOUNDS line per variable (the BOUNDS
// section doubles as the variable registry when parsing), INTEGER section
// only when needed, END terminator. Writing after parsing reproduces the
// document byte for byte.

namespace detail {

inline std::string terms_to_string(const std::vector<Rat>& coeffs,
                                   const std::vector<ModelVariable>& vars) {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_decimal(coeffs[j]);
    out += ' ';
    out += vars[j].name;
  }
  return out.empty() ? "0" : out;
}

inline std::string bound_to_string(const MaybeRat& b, bool lower) {
  if (!b) return lower ? "-inf" : "inf";
  return to_decimal(*b);
}

}  // namespace detail

inline std::string write_model(const IlpModel& model) {
  validate_model(model);
  std::ostringstream out;
  if (model.objective) {
    out << (model.objective->direction == Direction::Maximize ? "MAXIMIZE" : "MINIMIZE") << ' '
        << detail::terms_to_string(model.objective->coefficients, model.variables) << '\n';
  } else {
    out << "FEASIBILITY\n";
  }
  if (!model.constraints.empty()) {
    out << "SUBJECT TO\n";
    for (const auto& c : model.constraints)
      out << c.name << ": " << detail::terms_to_string(c.coefficients, model.variables) << ' '
          << to_string(c.relation) << ' ' << to_decimal(c.rhs) << '\n';
  }
  if (!model.variables.empty()) {
    out << "BOUNDS\n";
    for (const auto& v : model.variables)
      out << detail::bound_to_string(v.lower, true) << " <= " << v.name
          << " <= " << detail::bound_to_string(v.upper, false) << '\n';
    bool any_integer = false;
    for (const auto& v : model.variables) any_integer = any_integer || v.integral;
    if (any_integer) {
      out << "INTEGER\n";
      bool first = true;
      for (const auto& v : model.variables) {
        if (!v.integral) continue;
        out << (first ? "" : " ") << v.name;
        first = false;
      }
      out << '\n';
    }
  }
  out << "END\n";
  return out.str();
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

inline MaybeRat parse_bound_token(const std::string& t, bool lower, std::size_t lineno) {
  if (lower && t == "-inf") return std::nullopt;
  if (!lower && t == "inf") return std::nullopt;
  auto q = parse_rational(t);
  if (!q)
    throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                          "bad bound '" + t + "'");
  return *q;
}

inline std::vector<Rat> parse_terms(const std::vector<std::string>& tokens, std::size_t begin,
                                    std::size_t end, const std::map<std::string, std::size_t>& index,
                                    std::size_t nvars, std::size_t lineno) {
  std::vector<Rat> row(nvars, Rat(0));
  if (end - begin == 1 && tokens[begin] == "0") return row;
  std::size_t k = begin;
  while (k < end) {
    if (end - k < 2)
      throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                            "dangling term");
    auto coeff = parse_rational(tokens[k]);
    if (!coeff)
      throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                            "bad coefficient '" + tokens[k] + "'");
    auto it = index.find(tokens[k + 1]);
    if (it == index.end())
      throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                            "unknown variable '" + tokens[k + 1] + "'");
    row[it->second] += *coeff;
    k += 2;
    if (k < end) {
      if (tokens[k] != "+")
        throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                              "expected '+', got '" + tokens[k] + "'");
      ++k;
    }
  }
  return row;
}

}  // namespace detail

inline IlpModel read_model(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  enum class Section { Header, Constraints, Bounds, Integer, Done };
  std::string header;
  std::size_t header_line = 0;
  struct RawConstraint {
    std::string line;
    std::size_t lineno;
  };
  std::vector<RawConstraint> raw_constraints;
  IlpModel model;
  std::map<std::string, std::size_t> index;
  Section section = Section::Header;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (line.empty()) continue;
    if (line == "END") {
      section = Section::Done;
      continue;
    }
    if (section == Section::Done)
      throw ValidationError(errc::invalid_model, "line " + std::to_string(li + 1),
                            "content after END");
    if (section == Section::Header) {
      header = line;
      header_line = li + 1;
      section = Section::Constraints;
      continue;
    }
    if (line == "SUBJECT TO") continue;
    if (line == "BOUNDS") {
      section = Section::Bounds;
      continue;
    }
    if (line == "INTEGER") {
      section = Section::Integer;
      continue;
    }
    switch (section) {
      case Section::Constraints:
        raw_constraints.push_back({line, li + 1});
        break;
      case Section::Bounds: {
        auto tokens = detail::split_ws(line);
        if (tokens.size() != 5 || tokens[1] != "<=" || tokens[3] != "<=")
          throw ValidationError(errc::invalid_model, "line " + std::to_string(li + 1),
                                "expected 'lo <= name <= hi'");
        if (index.count(tokens[2]))
          throw ValidationError(errc::invalid_model, "line " + std::to_string(li + 1),
                                "duplicate variable '" + tokens[2] + "'");
        MaybeRat lo = detail::parse_bound_token(tokens[0], true, li + 1);
        MaybeRat hi = detail::parse_bound_token(tokens[4], false, li + 1);
        index[tokens[2]] = model.variables.size();
        model.variables.push_back({tokens[2], std::move(lo), std::move(hi), false});
        break;
      }
      case Section::Integer: {
        for (const auto& name : detail::split_ws(line)) {
          auto it = index.find(name);
          if (it == index.end())
            throw ValidationError(errc::invalid_model, "line " + std::to_string(li + 1),
                                  "unknown variable '" + name + "'");
          model.variables[it->second].integral = true;
        }
        break;
      }
      default:
        throw ValidationError(errc::invalid_model, "line " + std::to_string(li + 1),
                              "unexpected line");
    }
  }
  if (header.empty())
    throw ValidationError(errc::invalid_model, "", "missing header line");

  const std::size_t nvars = model.variables.size();

  {
    auto tokens = detail::split_ws(header);
    if (tokens[0] == "FEASIBILITY") {
      if (tokens.size() != 1)
        throw ValidationError(errc::invalid_model, "line " + std::to_string(header_line),
                              "unexpected tokens after FEASIBILITY");
    } else if (tokens[0] == "MAXIMIZE" || tokens[0] == "MINIMIZE") {
      Objective obj;
      obj.direction = tokens[0] == "MAXIMIZE" ? Direction::Maximize : Direction::Minimize;
      obj.coefficients =
          detail::parse_terms(tokens, 1, tokens.size(), index, nvars, header_line);
      model.objective = std::move(obj);
    } else {
      throw ValidationError(errc::invalid_model, "line " + std::to_string(header_line),
                            "bad header '" + tokens[0] + "'");
    }
  }

  for (const auto& [line, lineno] : raw_constraints) {
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                            "missing ':' in constraint");
    const std::string name = line.substr(0, colon);
    auto tokens = detail::split_ws(line.substr(colon + 1));
    if (tokens.size() < 3)
      throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                            "truncated constraint");
    const std::string& rel_tok = tokens[tokens.size() - 2];
    Relation rel;
    if (rel_tok == "<=")
      rel = Relation::LessEq;
    else if (rel_tok == "=")
      rel = Relation::Eq;
    else if (rel_tok == ">=")
      rel = Relation::GreaterEq;
    else
      throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                            "bad relation '" + rel_tok + "'");
    auto rhs = parse_rational(tokens.back());
    if (!rhs)
      throw ValidationError(errc::invalid_model, "line " + std::to_string(lineno),
                            "bad right-hand side '" + tokens.back() + "'");
    auto row = detail::parse_terms(tokens, 0, tokens.size() - 2, index, nvars, lineno);
    model.add_constraint(name, std::move(row), rel, std::move(*rhs));
  }

  validate_model(model);
  return model;
}

}  // namespace eef
