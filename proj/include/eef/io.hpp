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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eef/engine.hpp"
#include "eef/errors.hpp"
#include "eef/instance.hpp"
#include "eef/oracle.hpp"
#include "eef/pilp.hpp"
#include "eef/verdict.hpp"

namespace eef {

using Json = nlohmann::json;

namespace detail {

// Numbers are accepted as plain JSON integers or as decimal strings; output
// always uses decimal strings so values beyond double precision survive any
// consumer.
inline Int json_to_int(const Json& v, const std::string& location) {
  if (v.is_number_integer())
    return Int(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned())
    return Int(std::to_string(v.get<unsigned long long>()));
  if (v.is_string()) {
    auto parsed = parse_decimal(v.get<std::string>());
    if (!parsed)
      throw ValidationError(errc::malformed_document, location,
                            "'" + v.get<std::string>() + "' is not a decimal integer");
    return *parsed;
  }
  throw ValidationError(errc::malformed_document, location,
                        "expected an integer or a decimal string");
}

inline const Json& require_key(const Json& obj, const char* key, const std::string& location) {
  if (!obj.is_object() || !obj.contains(key))
    throw ValidationError(errc::malformed_document, location + "/" + key, "missing key");
  return obj.at(key);
}

inline Json profile_to_json(const UtilityProfile& p) {
  Json arr = Json::array();
  for (const auto& v : p.per_agent) arr.push_back(to_decimal(v));
  return arr;
}

inline UtilityProfile profile_from_json(const Json& arr, const std::string& location) {
  if (!arr.is_array())
    throw ValidationError(errc::malformed_document, location, "expected a list");
  UtilityProfile p;
  p.welfare = 0;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    p.per_agent.push_back(json_to_int(arr[k], location + "/" + std::to_string(k)));
    p.welfare += p.per_agent.back();
  }
  return p;
}

inline Json matrix_to_json(const std::vector<std::vector<Int>>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json jrow = Json::array();
    for (const auto& v : row) jrow.push_back(to_decimal(v));
    arr.push_back(std::move(jrow));
  }
  return arr;
}

inline std::vector<std::vector<Int>> matrix_from_json(const Json& arr,
                                                      const std::string& location) {
  if (!arr.is_array())
    throw ValidationError(errc::malformed_document, location, "expected a matrix");
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = 0; r < arr.size(); ++r) {
    const Json& jrow = arr[r];
    if (!jrow.is_array())
      throw ValidationError(errc::malformed_document, location + "/" + std::to_string(r),
                            "expected a row");
    std::vector<Int> row;
    for (std::size_t c = 0; c < jrow.size(); ++c)
      row.push_back(
          json_to_int(jrow[c], location + "/" + std::to_string(r) + "/" + std::to_string(c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(errc::malformed_document, "", e.what());
  }
  if (!doc.is_object())
    throw ValidationError(errc::malformed_document, "", "expected a JSON object");

  const Json& jagents = detail::require_key(doc, "agents", "");
  if (!jagents.is_array())
    throw ValidationError(errc::malformed_document, "/agents", "expected a list of strings");
  std::vector<std::string> agents;
  for (std::size_t k = 0; k < jagents.size(); ++k) {
    if (!jagents[k].is_string())
      throw ValidationError(errc::malformed_document, "/agents/" + std::to_string(k),
                            "expected a string");
    agents.push_back(jagents[k].get<std::string>());
  }

  const Json& jitems = detail::require_key(doc, "items", "");
  if (!jitems.is_array())
    throw ValidationError(errc::malformed_document, "/items", "expected a list");
  std::vector<ItemType> items;
  for (std::size_t k = 0; k < jitems.size(); ++k) {
    const std::string loc = "/items/" + std::to_string(k);
    const Json& jitem = jitems[k];
    if (!jitem.is_object())
      throw ValidationError(errc::malformed_document, loc, "expected an object");
    const Json& jname = detail::require_key(jitem, "name", loc);
    if (!jname.is_string())
      throw ValidationError(errc::malformed_document, loc + "/name", "expected a string");
    const Json& jmult = detail::require_key(jitem, "multiplicity", loc);
    items.push_back(
        {jname.get<std::string>(), detail::json_to_int(jmult, loc + "/multiplicity")});
  }

  const Json& jutil = detail::require_key(doc, "utilities", "");
  auto utilities = detail::matrix_from_json(jutil, "/utilities");

  Fairness fairness = Fairness::EF;
  if (doc.contains("fairness")) {
    const Json& jf = doc.at("fairness");
    if (!jf.is_string())
      throw ValidationError(errc::malformed_document, "/fairness", "expected a string");
    auto parsed = fairness_from_string(jf.get<std::string>());
    if (!parsed)
      throw ValidationError(errc::malformed_document, "/fairness",
                            "expected one of EF, EF1, EFX");
    fairness = *parsed;
  }

  std::optional<std::vector<EnvyEdge>> envy_graph;
  if (doc.contains("envy_graph")) {
    const Json& jgraph = doc.at("envy_graph");
    if (!jgraph.is_array())
      throw ValidationError(errc::malformed_document, "/envy_graph", "expected a list of pairs");
    std::vector<EnvyEdge> edges;
    for (std::size_t k = 0; k < jgraph.size(); ++k) {
      const std::string loc = "/envy_graph/" + std::to_string(k);
      const Json& jedge = jgraph[k];
      if (!jedge.is_array() || jedge.size() != 2 || !jedge[0].is_number_integer() ||
          !jedge[1].is_number_integer())
        throw ValidationError(errc::malformed_document, loc, "expected [from, to]");
      edges.emplace_back(jedge[0].get<int>(), jedge[1].get<int>());
    }
    envy_graph = std::move(edges);
  }

  return Instance::validated(std::move(agents), std::move(items), std::move(utilities),
                             fairness, std::move(envy_graph));
}

inline std::string serialize_instance(const Instance& inst) {
  Json doc;
  doc["agents"] = inst.agents();
  Json items = Json::array();
  for (const auto& item : inst.items())
    items.push_back({{"name", item.name}, {"multiplicity", to_decimal(item.multiplicity)}});
  doc["items"] = std::move(items);
  doc["utilities"] = detail::matrix_to_json(inst.utilities());
  doc["fairness"] = to_string(inst.fairness());
  Json graph = Json::array();
  for (const auto& [a, b] : inst.envy_edges()) graph.push_back({a, b});
  doc["envy_graph"] = std::move(graph);
  return detail::dump(doc);
}

inline std::string serialize_verdict(const Verdict& v) {
  Json doc;
  doc["answer"] = v.yes() ? "YES" : "NO";
  doc["iterations"] = v.iterations;
  if (v.yes()) {
    doc["allocation"] = detail::matrix_to_json(v.certificate->entries);
    doc["profile"] = detail::profile_to_json(*v.certificate_profile);
    doc["welfare"] = to_decimal(v.certificate_profile->welfare);
  } else {
    Json blocked = Json::array();
    for (const auto& q : v.blocked_profiles) blocked.push_back(detail::profile_to_json(q));
    doc["blocked_profiles"] = std::move(blocked);
  }
  return detail::dump(doc);
}

inline Verdict parse_verdict(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(errc::malformed_document, "", e.what());
  }
  const Json& janswer = detail::require_key(doc, "answer", "");
  Verdict v;
  if (janswer == "YES")
    v.answer = Verdict::Answer::Yes;
  else if (janswer == "NO")
    v.answer = Verdict::Answer::No;
  else
    throw ValidationError(errc::malformed_document, "/answer", "expected YES or NO");
  const Json& jiter = detail::require_key(doc, "iterations", "");
  if (!jiter.is_number_integer())
    throw ValidationError(errc::malformed_document, "/iterations", "expected an integer");
  v.iterations = jiter.get<std::int64_t>();
  if (v.yes()) {
    v.certificate =
        Allocation{detail::matrix_from_json(detail::require_key(doc, "allocation", ""),
                                            "/allocation")};
    v.certificate_profile =
        detail::profile_from_json(detail::require_key(doc, "profile", ""), "/profile");
    const Int welfare = detail::json_to_int(detail::require_key(doc, "welfare", ""), "/welfare");
    if (welfare != v.certificate_profile->welfare)
      throw ValidationError(errc::malformed_document, "/welfare",
                            "welfare does not match the profile sum");
  } else {
    const Json& jblocked = detail::require_key(doc, "blocked_profiles", "");
    if (!jblocked.is_array())
      throw ValidationError(errc::malformed_document, "/blocked_profiles", "expected a list");
    for (std::size_t k = 0; k < jblocked.size(); ++k)
      v.blocked_profiles.push_back(detail::profile_from_json(
          jblocked[k], "/blocked_profiles/" + std::to_string(k)));
  }
  return v;
}

// An allocation document is either a bare matrix or an object with an
// "allocation" key; in particular a YES verdict document parses directly.
inline Allocation parse_allocation(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(errc::malformed_document, "", e.what());
  }
  if (doc.is_array()) return Allocation{detail::matrix_from_json(doc, "")};
  if (doc.is_object() && doc.contains("allocation"))
    return Allocation{detail::matrix_from_json(doc.at("allocation"), "/allocation")};
  throw ValidationError(errc::malformed_document, "",
                        "expected a matrix or an object with an 'allocation' key");
}

inline std::string serialize_allocation(const Allocation& alloc) {
  Json doc;
  doc["allocation"] = detail::matrix_to_json(alloc.entries);
  return detail::dump(doc);
}

inline std::string serialize_census(const Census& census) {
  Json doc;
  doc["allocations"] = to_decimal(census.allocations);
  doc["fair"] = to_decimal(census.fair);
  doc["pareto"] = to_decimal(census.pareto);
  doc["intersection"] = to_decimal(census.intersection);
  return detail::dump(doc);
}

inline std::string serialize_report(const VerifyReport& report) {
  Json fairness;
  fairness["ok"] = report.fair;
  fairness["notion"] = to_string(report.notion);
  Json pairs = Json::array();
  for (const auto& p : report.envy.envious_pairs)
    pairs.push_back({{"from", p.from}, {"to", p.to}, {"deficit", to_decimal(p.deficit)}});
  fairness["envious_pairs"] = std::move(pairs);
  if (report.notion == Fairness::EF1) {
    Json edges = Json::array();
    for (const auto& e : report.ef1_edges) {
      Json edge{{"from", e.from},
                {"to", e.to},
                {"ok", e.ok},
                {"residual", to_decimal(e.residual)}};
      if (e.removed_item)
        edge["removed_item"] = *e.removed_item;
      else
        edge["removed_item"] = nullptr;
      edges.push_back(std::move(edge));
    }
    fairness["ef1_edges"] = std::move(edges);
  }
  if (report.notion == Fairness::EFX) {
    Json violations = Json::array();
    for (const auto& v : report.efx_violations) {
      Json entry{{"from", v.from}, {"to", v.to}, {"residual", to_decimal(v.residual)}};
      if (v.item >= 0)
        entry["item"] = v.item;
      else
        entry["item"] = nullptr;
      violations.push_back(std::move(entry));
    }
    fairness["efx_violations"] = std::move(violations);
  }

  Json efficiency;
  efficiency["ok"] = report.efficient;
  if (report.dominator) {
    efficiency["dominator"] = detail::matrix_to_json(report.dominator->entries);
    efficiency["dominator_profile"] = detail::profile_to_json(*report.dominator_profile);
  }

  Json doc;
  doc["fairness"] = std::move(fairness);
  doc["efficiency"] = std::move(efficiency);
  doc["ok"] = report.ok();
  if (!report.induced_b.empty()) {
    Json b = Json::array();
    for (const auto& v : report.induced_b) b.push_back(to_decimal(v));
    doc["pilp_b"] = std::move(b);
  }
  return detail::dump(doc);
}

// Companion document for exported parametric systems: shapes, the b-group
// offsets, and how A rows consume b entries.
inline std::string serialize_export_manifest(const PilpSystem& sys, const std::string& a_file,
                                             const std::string& q_file) {
  Json split;
  auto group = [](std::size_t offset, std::size_t size) {
    return Json{{"offset", offset}, {"size", size}};
  };
  split["b1"] = group(sys.b_split.b1_offset, sys.b_split.b1_size);
  split["b2"] = group(sys.b_split.b2_offset, sys.b_split.b2_size);
  split["b3"] = group(sys.b_split.b3_offset, sys.b_split.b3_size);
  split["b4"] = group(sys.b_split.b4_offset, sys.b_split.b4_size);

  Json doc;
  doc["a_system"] = Json{{"file", a_file},
                         {"rows", sys.num_rows()},
                         {"cols", sys.num_cols()},
                         {"note", "row r takes right-hand side b[r]; emitted rhs 0 is a placeholder"}};
  doc["q_system"] = Json{{"file", q_file},
                         {"dimension", sys.q_dimension()},
                         {"integer_block_offset", sys.z_offset()}};
  doc["b_split"] = std::move(split);
  return detail::dump(doc);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ValidationError(errc::malformed_document, path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ValidationError(errc::malformed_document, path, "cannot write file");
  out << content;
}

}  // namespace eef
