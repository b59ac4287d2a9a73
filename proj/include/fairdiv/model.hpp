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


#ifndef FAIRDIV_MODEL_HPP_
#define FAIRDIV_MODEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairdiv/object_set.hpp"

namespace fairdiv {

using Utility = std::uint64_t;
/// Claim-weighted products: claim * utility never exceeds 2^90.
__extension__ typedef unsigned __int128 WideProduct;

/// Table preferences store 2^n entries and are capped lower than additive.
inline constexpr std::size_t kMaxTableObjects = 12;
/// Bounds that keep every claim-weighted product inside 128 bits.
inline constexpr Utility kMaxUtility = 1'000'000'000'000'000ULL;
inline constexpr std::uint64_t kMaxClaim = 1'000'000'000ULL;

enum class Agent : std::uint8_t { kOne = 0, kTwo = 1 };

constexpr Agent Other(Agent a) {
  return a == Agent::kOne ? Agent::kTwo : Agent::kOne;
}
constexpr std::size_t Index(Agent a) { return static_cast<std::size_t>(a); }
/// 1-based agent number as used in files, traces and the CLI.
constexpr int Number(Agent a) { return a == Agent::kOne ? 1 : 2; }
/// Inverse of Number(); throws std::invalid_argument for anything else.
Agent AgentFromNumber(int number);

/// Ordered, distinct, non-empty object labels.
class ObjectUniverse {
 public:
  ObjectUniverse() = default;
  /// Throws ValidationError on empty/duplicate labels or a size outside
  /// [1, kMaxObjects].
  explicit ObjectUniverse(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  ObjectSet all() const { return ObjectSet::Full(names_.size()); }

  std::optional<std::size_t> IndexOf(std::string_view label) const;

  /// "{a,d}" with labels in declared order; "{}" for the empty set.
  std::string Format(ObjectSet s) const;

  friend bool operator==(const ObjectUniverse&, const ObjectUniverse&) = default;

 private:
  std::vector<std::string> names_;
};

enum class Comparison { kAPreferred, kIndifferent, kBPreferred };

/// Cardinal utility over subsets, either additive over objects or an
/// explicit table with one entry per subset. u(empty) is always zero.
class PreferenceModel {
 public:
  enum class Kind { kAdditive, kTable };

  /// Throws ValidationError if a value exceeds kMaxUtility or there are
  /// more than kMaxObjects values.
  static PreferenceModel Additive(std::vector<Utility> values);
  /// `table[s.bits()]` is u(s). Throws ValidationError unless the table has
  /// 2^n entries for some 1 <= n <= kMaxTableObjects and table[0] == 0.
  static PreferenceModel Table(std::vector<Utility> table);

  Kind kind() const { return kind_; }
  std::size_t num_objects() const { return num_objects_; }
  const std::vector<Utility>& values() const { return data_; }

  Utility utility(ObjectSet s) const {
    if (kind_ == Kind::kTable) return data_[s.bits()];
    Utility sum = 0;
    for (ObjectSet::Bits b = s.bits(); b != 0; b &= b - 1) {
      sum += data_[static_cast<std::size_t>(std::countr_zero(b))];
    }
    return sum;
  }
  Utility singleton(std::size_t i) const {
    return utility(ObjectSet::Singleton(i));
  }

  friend bool operator==(const PreferenceModel&,
                         const PreferenceModel&) = default;

 private:
  PreferenceModel(Kind kind, std::size_t n, std::vector<Utility> data)
      : kind_(kind), num_objects_(n), data_(std::move(data)) {}

  Kind kind_ = Kind::kAdditive;
  std::size_t num_objects_ = 0;
  // Per-object values (additive) or the full subset table.
  std::vector<Utility> data_;
};

inline Utility utility(const PreferenceModel& pref, ObjectSet s) {
  return pref.utility(s);
}

Comparison compare(const PreferenceModel& pref, ObjectSet a, ObjectSet b);

/// Preference restricted to the objects of `pile`, re-indexed densely in
/// increasing universe order. Subsets of the pile keep their utilities.
PreferenceModel restrict(const PreferenceModel& pref, ObjectSet pile);
ObjectUniverse restrict(const ObjectUniverse& universe, ObjectSet pile);
/// Re-index a subset of `pile` into the restricted universe and back.
ObjectSet ProjectOnto(ObjectSet s, ObjectSet pile);
ObjectSet EmbedFrom(ObjectSet s, ObjectSet pile);

// ---------------------------------------------------------------------------
// Validators

enum class Property { kAllDesirable, kSeparable, kResponsive };
std::string_view ToString(Property p);

/// u({object}) <= u(empty).
struct DesirabilityWitness {
  std::size_t object;
  friend bool operator==(const DesirabilityWitness&,
                         const DesirabilityWitness&) = default;
};
/// object not in set, and adding it to set disagrees in sign with adding it
/// to the empty set.
struct SeparabilityWitness {
  std::size_t object;
  ObjectSet set;
  friend bool operator==(const SeparabilityWitness&,
                         const SeparabilityWitness&) = default;
};
/// x, y not in set, and u(set+x) >= u(set+y) disagrees with u(x) >= u(y).
struct ResponsivenessWitness {
  ObjectSet set;
  std::size_t x;
  std::size_t y;
  friend bool operator==(const ResponsivenessWitness&,
                         const ResponsivenessWitness&) = default;
};

using Witness = std::variant<DesirabilityWitness, SeparabilityWitness,
                             ResponsivenessWitness>;

struct ValidationReport {
  Property property;
  bool holds;
  std::optional<Witness> witness;
};

ValidationReport all_desirable(const PreferenceModel& pref);
ValidationReport is_separable(const PreferenceModel& pref);
/// Responsiveness includes separability; when only separability fails the
/// witness is a SeparabilityWitness.
ValidationReport is_responsive(const PreferenceModel& pref);

/// True iff `w` really demonstrates a violation under `pref`.
bool WitnessViolates(const PreferenceModel& pref, const Witness& w);

std::string FormatWitness(const ObjectUniverse& universe, const Witness& w);

// ---------------------------------------------------------------------------
// Profile

/// Weights used when agent `own` evaluates a split.
struct ClaimPair {
  std::uint64_t own = 1;
  std::uint64_t other = 1;
};

struct Claims {
  std::uint64_t agent1 = 1;
  std::uint64_t agent2 = 1;

  ClaimPair For(Agent a) const {
    return a == Agent::kOne ? ClaimPair{agent1, agent2}
                            : ClaimPair{agent2, agent1};
  }
  bool equal() const { return agent1 == agent2; }
  friend bool operator==(const Claims&, const Claims&) = default;
};

/// Two agents over one universe. Immutable once constructed.
class Profile {
 public:
  /// Throws ValidationError when a preference is over a different number of
  /// objects than the universe, or a claim is outside [1, kMaxClaim].
  Profile(ObjectUniverse universe, std::array<std::string, 2> names,
          std::array<PreferenceModel, 2> prefs, Claims claims);

  const ObjectUniverse& universe() const { return universe_; }
  std::size_t num_objects() const { return universe_.size(); }
  const std::string& name(Agent a) const { return names_[Index(a)]; }
  const PreferenceModel& pref(Agent a) const { return prefs_[Index(a)]; }
  const Claims& claims() const { return claims_; }

  Profile WithClaims(Claims claims) const {
    return Profile(universe_, names_, prefs_, claims);
  }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  ObjectUniverse universe_;
  std::array<std::string, 2> names_;
  std::array<PreferenceModel, 2> prefs_;
  Claims claims_;
};

/// Parses the JSON profile format. Throws ParseError or ValidationError.
Profile parse_profile(std::string_view text);
/// Canonical JSON: objects in declared order, table subsets by increasing
/// size then lexicographic order.
std::string serialize_profile(const Profile& profile);

}  // namespace fairdiv

#endif  // FAIRDIV_MODEL_HPP_
