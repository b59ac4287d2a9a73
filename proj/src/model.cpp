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


#include "fairdiv/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Agent AgentFromNumber(int number) {
  if (number == 1) return Agent::kOne;
  if (number == 2) return Agent::kTwo;
  throw std::invalid_argument("agent must be 1 or 2, got " +
                              std::to_string(number));
}

ObjectUniverse::ObjectUniverse(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty() || names_.size() > kMaxObjects) {
    throw ValidationError("/objects",
                          "number of objects must be in [1, " +
                              std::to_string(kMaxObjects) + "], got " +
                              std::to_string(names_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string loc = "/objects/" + std::to_string(i);
    if (names_[i].empty()) throw ValidationError(loc, "empty object label");
    if (!seen.insert(names_[i]).second) {
      throw ValidationError(loc, "duplicate object label '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> ObjectUniverse::IndexOf(
    std::string_view label) const {
  const auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::string ObjectUniverse::Format(ObjectSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.members()) {
    if (!first) out += ',';
    out += names_.at(i);
    first = false;
  }
  out += '}';
  return out;
}

PreferenceModel PreferenceModel::Additive(std::vector<Utility> values) {
  if (values.empty() || values.size() > kMaxObjects) {
    throw ValidationError("", "additive preference needs 1.." +
                                  std::to_string(kMaxObjects) + " values");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > kMaxUtility) {
      throw ValidationError("/values/" + std::to_string(i),
                            "utility exceeds " + std::to_string(kMaxUtility));
    }
  }
  const std::size_t n = values.size();
  return PreferenceModel(Kind::kAdditive, n, std::move(values));
}

PreferenceModel PreferenceModel::Table(std::vector<Utility> table) {
  const std::size_t entries = table.size();
  if (entries < 2 || !std::has_single_bit(entries) ||
      entries > (std::size_t{1} << kMaxTableObjects)) {
    throw ValidationError("", "table preference needs 2^n entries with 1 <= n <= " +
                                  std::to_string(kMaxTableObjects));
  }
  if (table[0] != 0) throw ValidationError("", "u({}) must be 0");
  for (std::size_t i = 0; i < entries; ++i) {
    if (table[i] > kMaxUtility) {
      throw ValidationError("/entries/" + std::to_string(i),
                            "utility exceeds " + std::to_string(kMaxUtility));
    }
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(entries));
  return PreferenceModel(Kind::kTable, n, std::move(table));
}

Comparison compare(const PreferenceModel& pref, ObjectSet a, ObjectSet b) {
  const Utility ua = pref.utility(a);
  const Utility ub = pref.utility(b);
  if (ua > ub) return Comparison::kAPreferred;
  if (ua < ub) return Comparison::kBPreferred;
  return Comparison::kIndifferent;
}

ObjectSet ProjectOnto(ObjectSet s, ObjectSet pile) {
  return ObjectSet(
      static_cast<ObjectSet::Bits>(SubsetIndexer(pile).Extract(s & pile)));
}

ObjectSet EmbedFrom(ObjectSet s, ObjectSet pile) {
  return SubsetIndexer(pile).Deposit(s.bits());
}

PreferenceModel restrict(const PreferenceModel& pref, ObjectSet pile) {
  if (pile.empty() || !pile.is_subset_of(ObjectSet::Full(pref.num_objects()))) {
    throw std::invalid_argument("restrict: pile must be a non-empty subset");
  }
  const SubsetIndexer indexer(pile);
  if (pref.kind() == PreferenceModel::Kind::kAdditive) {
    std::vector<Utility> values;
    for (std::size_t i : pile.members()) values.push_back(pref.values()[i]);
    return PreferenceModel::Additive(std::move(values));
  }
  std::vector<Utility> table(indexer.count());
  for (std::uint64_t i = 0; i < indexer.count(); ++i) {
    table[i] = pref.utility(indexer.Deposit(i));
  }
  return PreferenceModel::Table(std::move(table));
}

ObjectUniverse restrict(const ObjectUniverse& universe, ObjectSet pile) {
  std::vector<std::string> names;
  for (std::size_t i : pile.members()) names.push_back(universe.name(i));
  return ObjectUniverse(std::move(names));
}

// ---------------------------------------------------------------------------

std::string_view ToString(Property p) {
  switch (p) {
    case Property::kAllDesirable:
      return "all_desirable";
    case Property::kSeparable:
      return "separable";
    case Property::kResponsive:
      return "responsive";
  }
  return "?";
}

namespace {

int Sign(Utility a, Utility b) { return a > b ? 1 : (a < b ? -1 : 0); }

bool Violates(const PreferenceModel& p, const DesirabilityWitness& w) {
  return w.object < p.num_objects() && p.singleton(w.object) == 0;
}

bool Violates(const PreferenceModel& p, const SeparabilityWitness& w) {
  if (w.object >= p.num_objects() || w.set.contains(w.object) ||
      !w.set.is_subset_of(ObjectSet::Full(p.num_objects()))) {
    return false;
  }
  return Sign(p.utility(w.set.with(w.object)), p.utility(w.set)) !=
         Sign(p.singleton(w.object), 0);
}

bool Violates(const PreferenceModel& p, const ResponsivenessWitness& w) {
  const std::size_t n = p.num_objects();
  if (w.x >= n || w.y >= n || w.x == w.y || w.set.contains(w.x) ||
      w.set.contains(w.y) || !w.set.is_subset_of(ObjectSet::Full(n))) {
    return false;
  }
  const bool sets = p.utility(w.set.with(w.x)) >= p.utility(w.set.with(w.y));
  const bool singles = p.singleton(w.x) >= p.singleton(w.y);
  return sets != singles;
}

std::optional<SeparabilityWitness> FindSeparabilityViolation(
    const PreferenceModel& p) {
  // Non-negative additive values always pass.
  if (p.kind() == PreferenceModel::Kind::kAdditive) return std::nullopt;
  const std::size_t n = p.num_objects();
  const ObjectSet::Bits limit = ObjectSet::Bits{1} << n;
  for (ObjectSet::Bits s = 0; s < limit; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      const SeparabilityWitness w{x, ObjectSet(s)};
      if (!w.set.contains(x) && Violates(p, w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

bool WitnessViolates(const PreferenceModel& pref, const Witness& w) {
  return std::visit([&](const auto& v) { return Violates(pref, v); }, w);
}

ValidationReport all_desirable(const PreferenceModel& pref) {
  for (std::size_t x = 0; x < pref.num_objects(); ++x) {
    if (pref.singleton(x) == 0) {
      return {Property::kAllDesirable, false, DesirabilityWitness{x}};
    }
  }
  return {Property::kAllDesirable, true, std::nullopt};
}

ValidationReport is_separable(const PreferenceModel& pref) {
  if (auto w = FindSeparabilityViolation(pref)) {
    return {Property::kSeparable, false, *w};
  }
  return {Property::kSeparable, true, std::nullopt};
}

ValidationReport is_responsive(const PreferenceModel& pref) {
  if (pref.kind() == PreferenceModel::Kind::kTable) {
    const std::size_t n = pref.num_objects();
    const ObjectSet::Bits limit = ObjectSet::Bits{1} << n;
    for (ObjectSet::Bits s = 0; s < limit; ++s) {
      const ObjectSet set(s);
      for (std::size_t x = 0; x < n; ++x) {
        if (set.contains(x)) continue;
        for (std::size_t y = x + 1; y < n; ++y) {
          if (set.contains(y)) continue;
          for (const ResponsivenessWitness w : {ResponsivenessWitness{set, x, y},
                                                ResponsivenessWitness{set, y, x}}) {
            if (Violates(pref, w)) return {Property::kResponsive, false, w};
          }
        }
      }
    }
  }
  if (auto w = FindSeparabilityViolation(pref)) {
    return {Property::kResponsive, false, *w};
  }
  return {Property::kResponsive, true, std::nullopt};
}

std::string FormatWitness(const ObjectUniverse& u, const Witness& w) {
  struct Visitor {
    const ObjectUniverse& u;
    std::string operator()(const DesirabilityWitness& d) const {
      return "x=" + u.name(d.object);
    }
    std::string operator()(const SeparabilityWitness& s) const {
      return "x=" + u.name(s.object) + " S=" + u.Format(s.set);
    }
    std::string operator()(const ResponsivenessWitness& r) const {
      return "S=" + u.Format(r.set) + " x=" + u.name(r.x) + " y=" + u.name(r.y);
    }
  };
  return std::visit(Visitor{u}, w);
}

// ---------------------------------------------------------------------------

Profile::Profile(ObjectUniverse universe, std::array<std::string, 2> names,
                 std::array<PreferenceModel, 2> prefs, Claims claims)
    : universe_(std::move(universe)),
      names_(std::move(names)),
      prefs_(std::move(prefs)),
      claims_(claims) {
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string loc = "/agents/" + std::to_string(i);
    if (prefs_[i].num_objects() != universe_.size()) {
      throw ValidationError(loc + "/preference",
                            "preference is over " +
                                std::to_string(prefs_[i].num_objects()) +
                                " objects, universe has " +
                                std::to_string(universe_.size()));
    }
    const std::uint64_t c = i == 0 ? claims_.agent1 : claims_.agent2;
    if (c < 1) throw ValidationError(loc + "/claim", "claims must be positive");
    if (c > kMaxClaim) {
      throw ValidationError(loc + "/claim",
                            "claim exceeds " + std::to_string(kMaxClaim));
    }
  }
}

}  // namespace fairdiv
