// Copyright 2026 The fairdiv Authors
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


// JSON profile reader and canonical writer.

#include <algorithm>
#include <string>
#include <vector>

#include "fairdiv/errors.hpp"
#include "fairdiv/model.hpp"
#include "json.hpp"

namespace fairdiv {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& Require(const json& obj, const char* key, const std::string& loc) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(loc + ": missing field '" + key + "'");
  }
  return *it;
}

Utility ReadUtility(const json& v, const std::string& loc) {
  if (!v.is_number()) throw ParseError(loc + ": utility must be a number");
  if (!v.is_number_integer()) {
    throw ValidationError(loc, "utilities must be integers");
  }
  if (!v.is_number_unsigned() && v.get<std::int64_t>() < 0) {
    throw ValidationError(loc, "negative utility");
  }
  const auto u = v.get<std::uint64_t>();
  if (u > kMaxUtility) {
    throw ValidationError(loc, "utility exceeds " + std::to_string(kMaxUtility));
  }
  return u;
}

std::uint64_t ReadClaim(const json& agent, const std::string& loc) {
  const auto it = agent.find("claim");
  if (it == agent.end()) return 1;
  if (!it->is_number_integer()) {
    throw ValidationError(loc + "/claim", "claims must be positive integers");
  }
  if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0) {
    throw ValidationError(loc + "/claim", "claims must be positive");
  }
  return it->get<std::uint64_t>();
}

std::size_t LookupLabel(const ObjectUniverse& universe, const json& v,
                        const std::string& loc) {
  if (!v.is_string()) throw ParseError(loc + ": object label must be a string");
  const auto idx = universe.IndexOf(v.get<std::string>());
  if (!idx) {
    throw ValidationError(loc, "unknown object '" + v.get<std::string>() + "'");
  }
  return *idx;
}

PreferenceModel ReadAdditive(const ObjectUniverse& universe, const json& pref,
                             const std::string& loc) {
  const json& values = Require(pref, "values", loc);
  if (!values.is_object()) throw ParseError(loc + "/values: expected an object");
  std::vector<std::optional<Utility>> slots(universe.size());
  for (const auto& [label, value] : values.items()) {
    const std::string vloc = loc + "/values/" + label;
    const auto idx = universe.IndexOf(label);
    if (!idx) throw ValidationError(vloc, "unknown object '" + label + "'");
    slots[*idx] = ReadUtility(value, vloc);
  }
  std::vector<Utility> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      throw ValidationError(loc + "/values",
                            "missing value for object '" + universe.name(i) + "'");
    }
    out.push_back(*slots[i]);
  }
  return PreferenceModel::Additive(std::move(out));
}

PreferenceModel ReadTable(const ObjectUniverse& universe, const json& pref,
                          const std::string& loc) {
  if (universe.size() > kMaxTableObjects) {
    throw ValidationError(loc, "table preferences allow at most " +
                                   std::to_string(kMaxTableObjects) + " objects");
  }
  const json& entries = Require(pref, "entries", loc);
  if (!entries.is_array()) throw ParseError(loc + "/entries: expected an array");
  const std::size_t count = std::size_t{1} << universe.size();
  std::vector<std::optional<Utility>> table(count);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string eloc = loc + "/entries/" + std::to_string(e);
    const json& entry = entries[e];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array()) {
      throw ParseError(eloc + ": expected [[labels...], utility]");
    }
    ObjectSet set;
    for (std::size_t k = 0; k < entry[0].size(); ++k) {
      const std::size_t idx =
          LookupLabel(universe, entry[0][k], eloc + "/0/" + std::to_string(k));
      if (set.contains(idx)) {
        throw ValidationError(eloc, "object '" + universe.name(idx) +
                                        "' repeated within a subset");
      }
      set = set.with(idx);
    }
    if (table[set.bits()]) {
      throw ValidationError(eloc, "duplicate entry for " + universe.Format(set));
    }
    table[set.bits()] = ReadUtility(entry[1], eloc + "/1");
  }
  // Report missing subsets in canonical order so the message is stable.
  std::vector<ObjectSet> missing;
  for (std::size_t s = 0; s < count; ++s) {
    if (!table[s]) missing.emplace_back(static_cast<ObjectSet::Bits>(s));
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end(), CanonicalOrder{});
    throw ValidationError(loc + "/entries", "missing table entry for " +
                                                universe.Format(missing.front()));
  }
  if (*table[0] != 0) throw ValidationError(loc + "/entries", "u({}) must be 0");
  std::vector<Utility> out(count);
  std::transform(table.begin(), table.end(), out.begin(),
                 [](const std::optional<Utility>& u) { return *u; });
  return PreferenceModel::Table(std::move(out));
}

}  // namespace

Profile parse_profile(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("profile must be a JSON object");

  const json& objects = Require(doc, "objects", "");
  if (!objects.is_array()) throw ParseError("/objects: expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!objects[i].is_string()) {
      throw ParseError("/objects/" + std::to_string(i) + ": expected a string");
    }
    names.push_back(objects[i].get<std::string>());
  }
  ObjectUniverse universe(std::move(names));

  const json& agents = Require(doc, "agents", "");
  if (!agents.is_array()) throw ParseError("/agents: expected an array");
  if (agents.size() != 2) {
    throw ValidationError("/agents", "exactly two agents required, got " +
                                         std::to_string(agents.size()));
  }

  std::array<std::string, 2> agent_names{"1", "2"};
  std::array<std::optional<PreferenceModel>, 2> prefs;
  std::array<std::uint64_t, 2> claims{};
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string loc = "/agents/" + std::to_string(i);
    const json& agent = agents[i];
    if (!agent.is_object()) throw ParseError(loc + ": expected an object");
    if (const auto it = agent.find("name"); it != agent.end()) {
      if (!it->is_string() || it->get<std::string>().empty()) {
        throw ValidationError(loc + "/name", "agent name must be a non-empty string");
      }
      agent_names[i] = it->get<std::string>();
    }
    claims[i] = ReadClaim(agent, loc);
    const std::string ploc = loc + "/preference";
    const json& pref = Require(agent, "preference", loc);
    if (!pref.is_object()) throw ParseError(ploc + ": expected an object");
    const json& kind = Require(pref, "kind", ploc);
    if (kind == "additive") {
      prefs[i] = ReadAdditive(universe, pref, ploc);
    } else if (kind == "table") {
      prefs[i] = ReadTable(universe, pref, ploc);
    } else {
      throw ParseError(ploc + "/kind: expected \"additive\" or \"table\"");
    }
  }
  return Profile(std::move(universe), std::move(agent_names),
                 {std::move(*prefs[0]), std::move(*prefs[1])},
                 Claims{claims[0], claims[1]});
}

std::string serialize_profile(const Profile& profile) {
  const ObjectUniverse& universe = profile.universe();
  ordered_json doc;
  doc["objects"] = universe.names();
  doc["agents"] = ordered_json::array();
  for (Agent a : {Agent::kOne, Agent::kTwo}) {
    const PreferenceModel& pref = profile.pref(a);
    ordered_json agent;
    agent["name"] = profile.name(a);
    agent["claim"] = profile.claims().For(a).own;
    ordered_json p;
    if (pref.kind() == PreferenceModel::Kind::kAdditive) {
      p["kind"] = "additive";
      ordered_json values = ordered_json::object();
      for (std::size_t i = 0; i < universe.size(); ++i) {
        values[universe.name(i)] = pref.values()[i];
      }
      p["values"] = std::move(values);
    } else {
      p["kind"] = "table";
      std::vector<ObjectSet> subsets;
      ForEachSubset(universe.all(), [&](ObjectSet s) { subsets.push_back(s); });
      std::sort(subsets.begin(), subsets.end(), CanonicalOrder{});
      ordered_json entries = ordered_json::array();
      for (ObjectSet s : subsets) {
        ordered_json labels = ordered_json::array();
        for (std::size_t i : s.members()) labels.push_back(universe.name(i));
        entries.push_back(ordered_json::array({labels, pref.utility(s)}));
      }
      p["entries"] = std::move(entries);
    }
    agent["preference"] = std::move(p);
    doc["agents"].push_back(std::move(agent));
  }
  return doc.dump(2) + "\n";
}

}  // namespace fairdiv
