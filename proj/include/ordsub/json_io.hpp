// Copyright 2026 The ordsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON encodings for set functions, chains and result records.
//
// Set function:  {"ground_set": ["a","b"], "codomain": {"kind": "integer"},
//                 "values_dense": [1,0,2,3]}
// or the sparse  "values": {"": 1, "a": 0, "b": 2, "a,b": 3}.
// Rationals are [num, den]; labels are strings from "label_order".

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordsub/conditions.hpp"
#include "ordsub/error.hpp"
#include "ordsub/hierarchy.hpp"
#include "ordsub/minimize.hpp"
#include "ordsub/set_function.hpp"
#include "ordsub/verify.hpp"

namespace ordsub {

using json = nlohmann::ordered_json;

enum class ValueLayout { dense, sparse };

namespace detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
  throw Error(Errc::parse, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

inline const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing \"" + key + "\"");
  return *it;
}

inline std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    bad(where, "integer out of range");
  return j.get<std::int64_t>();
}

}  // namespace detail

inline json to_json(const OrdinalValue& v, const Codomain& codomain) {
  switch (v.kind()) {
    case CodomainKind::integer: return v.numerator();
    case CodomainKind::rational: return json::array({v.numerator(), v.denominator()});
    case CodomainKind::labels: return codomain.label_order().at(v.label_index());
  }
  return nullptr;
}

inline OrdinalValue value_from_json(const json& j, const Codomain& codomain, const std::string& where) {
  switch (codomain.kind()) {
    case CodomainKind::integer:
      return OrdinalValue::integer(detail::as_int(j, where));
    case CodomainKind::rational:
      if (j.is_number_integer()) return OrdinalValue::rational(detail::as_int(j, where), 1);
      if (!j.is_array() || j.size() != 2) detail::bad(where, "expected [numerator, denominator]");
      {
        const auto num = detail::as_int(j[0], where + "/0");
        const auto den = detail::as_int(j[1], where + "/1");
        if (den == 0) detail::bad(where, "zero denominator");
        return OrdinalValue::rational(num, den);
      }
    case CodomainKind::labels: {
      if (!j.is_string()) detail::bad(where, "expected a label string");
      const auto idx = codomain.find_label(j.get<std::string>());
      if (!idx) detail::bad(where, "label \"" + j.get<std::string>() + "\" not in label_order");
      return OrdinalValue::label(*idx);
    }
  }
  detail::bad(where, "unknown codomain");
}

inline json to_json(const Codomain& c) {
  json j = {{"kind", std::string(kind_name(c.kind()))}};
  if (c.kind() == CodomainKind::labels) j["label_order"] = c.label_order();
  return j;
}

inline Codomain codomain_from_json(const json& j, const std::string& where) {
  const json& kind = detail::member(j, "kind", where);
  if (!kind.is_string()) detail::bad(where + "/kind", "expected a string");
  const auto k = parse_kind(kind.get<std::string>());
  if (!k) detail::bad(where + "/kind", "unknown kind \"" + kind.get<std::string>() + "\"");
  if (*k != CodomainKind::labels) return Codomain::numeric(*k);
  const json& order = detail::member(j, "label_order", where);
  if (!order.is_array()) detail::bad(where + "/label_order", "expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!order[i].is_string()) detail::bad(where + "/label_order/" + std::to_string(i), "expected a string");
    labels.push_back(order[i].get<std::string>());
  }
  try {
    return Codomain::labels(std::move(labels));
  } catch (const Error& e) {
    detail::bad(where + "/label_order", e.message());
  }
}

inline GroundSet ground_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) detail::bad(where, "expected an array of element names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) detail::bad(where + "/" + std::to_string(i), "expected a string");
    names.push_back(j[i].get<std::string>());
  }
  try {
    return GroundSet::make(std::move(names));
  } catch (const Error& e) {
    detail::bad(where, e.message());
  }
}

inline json to_json(const SetFunction& f, ValueLayout layout = ValueLayout::dense) {
  json j;
  j["ground_set"] = f.ground().names();
  j["codomain"] = to_json(f.codomain());
  if (layout == ValueLayout::dense) {
    json values = json::array();
    for (const auto& v : f.values()) values.push_back(to_json(v, f.codomain()));
    j["values_dense"] = std::move(values);
  } else {
    json values = json::object();
    for (std::uint32_t m = 0; m < f.size(); ++m)
      values[f.ground().format(Subset(m))] = to_json(f(Subset(m)), f.codomain());
    j["values"] = std::move(values);
  }
  return j;
}

inline SetFunction set_function_from_json(const json& j) {
  GroundSet ground = ground_from_json(detail::member(j, "ground_set", ""), "/ground_set");
  Codomain codomain = codomain_from_json(detail::member(j, "codomain", ""), "/codomain");
  const std::size_t size = ground.power_set_size();
  std::vector<OrdinalValue> values(size);
  const bool dense = j.contains("values_dense");
  const bool sparse = j.contains("values");
  if (dense == sparse) detail::bad("", "exactly one of \"values_dense\" and \"values\" is required");
  if (dense) {
    const json& arr = j["values_dense"];
    if (!arr.is_array()) detail::bad("/values_dense", "expected an array");
    if (arr.size() != size)
      detail::bad("/values_dense", "expected " + std::to_string(size) + " values, got " +
                                       std::to_string(arr.size()));
    for (std::size_t i = 0; i < size; ++i)
      values[i] = value_from_json(arr[i], codomain, "/values_dense/" + std::to_string(i));
  } else {
    const json& obj = j["values"];
    if (!obj.is_object()) detail::bad("/values", "expected an object keyed by subsets");
    std::vector<bool> seen(size, false);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      const std::string where = "/values/" + it.key();
      Subset s;
      try {
        s = ground.parse(it.key());
      } catch (const Error& e) {
        detail::bad(where, e.message());
      }
      if (seen[s.mask]) detail::bad(where, "subset listed twice");
      seen[s.mask] = true;
      values[s.mask] = value_from_json(it.value(), codomain, where);
    }
    for (std::uint32_t m = 0; m < size; ++m)
      if (!seen[m]) detail::bad("/values", "missing subset \"" + ground.format(Subset(m)) + "\"");
  }
  return SetFunction(std::move(ground), std::move(codomain), std::move(values));
}

// Parses text, reporting syntax errors with line and column.
inline json parse_json_text(const std::string& text, const std::string& source = "input") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                 ": malformed JSON (byte " + std::to_string(e.byte) + ")");
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SetFunction read_set_function(const std::string& path) {
  const json j = parse_json_text(read_text_file(path), path);
  try {
    return set_function_from_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

inline json names_json(const GroundSet& g, Subset s) { return g.element_names(s); }

inline json to_json(const ConditionWitness& w, const SetFunction& f) {
  const auto& c = f.codomain();
  return {{"condition", std::string(condition_name(w.condition))},
          {"X", f.ground().format(w.x)},
          {"Y", f.ground().format(w.y)},
          {"values", json::array({to_json(w.vx, c), to_json(w.vy, c), to_json(w.vunion, c),
                                  to_json(w.vinter, c)})}};
}

inline json to_json(const ClassReport& r, const SetFunction& f, bool with_witnesses = true) {
  json j;
  for (auto c : kAllConditions) {
    const auto flag = r.flag(c);
    j[std::string(condition_name(c))] = flag ? json(*flag) : json(nullptr);
  }
  if (with_witnesses) {
    json w = json::object();
    for (const auto& [cond, witness] : r.witnesses()) w[std::string(condition_name(cond))] = to_json(witness, f);
    j["witnesses"] = std::move(w);
  }
  return j;
}

inline json to_json(const ArgminSet& a, const SetFunction& f) {
  json mins = json::array();
  for (auto s : a.minimizers) mins.push_back(names_json(f.ground(), s));
  return {{"minimizers", std::move(mins)}, {"min_value", to_json(a.min_value, f.codomain())}};
}

inline json to_json(const MinimalityCertificate& c, const SetFunction& f) {
  return {{"point", names_json(f.ground(), c.point)},
          {"value", to_json(c.value, f.codomain())},
          {"lower_checked", c.lower_checked},
          {"upper_checked", c.upper_checked},
          {"interval_local", c.interval_local},
          {"hypothesis", c.hypothesis ? json(std::string(hypothesis_name(*c.hypothesis))) : json(nullptr)},
          {"hypothesis_verified", c.hypothesis_verified},
          {"global", c.global},
          {"status", std::string(status_name(c.status))},
          {"reason", c.reason}};
}

inline json to_json(const DescentTrace& t, const SetFunction& f) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"point", names_json(f.ground(), s.point)}, {"value", to_json(s.value, f.codomain())}});
  return {{"trace", std::move(steps)}, {"moves", t.moves()}, {"certificate", to_json(t.certificate, f)}};
}

inline json to_json(const LevelValues& lv, const Codomain& c) {
  json mu = json::array();
  for (const auto& v : lv.mu) mu.push_back(to_json(v, c));
  return {{"mu", std::move(mu)}, {"p", lv.p()}};
}

// {"ground_set": [...], "families": [[], ["", "a,b"], ...]}
inline json to_json(const LevelChain& chain, const GroundSet& ground) {
  json fams = json::array();
  for (const auto& fam : chain.families) {
    json keys = json::array();
    for (auto s : fam) keys.push_back(ground.format(s));
    fams.push_back(std::move(keys));
  }
  return {{"ground_set", ground.names()}, {"families", std::move(fams)}};
}

struct ChainFile {
  GroundSet ground;
  LevelChain chain;
};

inline ChainFile chain_from_json(const json& j) {
  GroundSet ground = ground_from_json(detail::member(j, "ground_set", ""), "/ground_set");
  const json& fams = detail::member(j, "families", "");
  if (!fams.is_array()) detail::bad("/families", "expected an array of families");
  LevelChain chain;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    const std::string where = "/families/" + std::to_string(i);
    if (!fams[i].is_array()) detail::bad(where, "expected an array of subset keys");
    Family fam;
    for (std::size_t k = 0; k < fams[i].size(); ++k) {
      if (!fams[i][k].is_string()) detail::bad(where + "/" + std::to_string(k), "expected a subset key");
      try {
        fam.push_back(ground.parse(fams[i][k].get<std::string>()));
      } catch (const Error& e) {
        detail::bad(where + "/" + std::to_string(k), e.message());
      }
    }
    std::sort(fam.begin(), fam.end());
    chain.families.push_back(std::move(fam));
  }
  return {std::move(ground), std::move(chain)};
}

inline json to_json(const ConstrainedArgmin& r, const SetFunction& phi, const SetFunction& f) {
  json j = to_json(r.argmin, phi);
  j["feasible"] = r.feasible;
  j["threshold"] = to_json(r.threshold, f.codomain());
  return j;
}

inline json to_json(const SuiteReport& r) {
  json j = {{"suite", std::string(suite_name(r.suite))},
            {"claim", std::string(suite_claim(r.suite))},
            {"n", r.n},
            {"scanned", r.scanned},
            {"hypothesis", r.hypothesis},
            {"violations", r.violations}};
  j["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
  return j;
}

}  // namespace ordsub
