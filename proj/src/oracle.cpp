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


#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "fairdiv/errors.hpp"

namespace fairdiv::oracle {

std::string_view ToString(Relation r) {
  switch (r) {
    case Relation::kStrictlyPrefersOwn:
      return "strictly_prefers_own";
    case Relation::kIndifferent:
      return "indifferent";
    case Relation::kEnvies:
      return "envies";
  }
  return "?";
}

std::string_view ToString(Verdict v) {
  switch (v) {
    case Verdict::kEfTrivial:
      return "ef_trivial";
    case Verdict::kEfNontrivial:
      return "ef_nontrivial";
    case Verdict::kNotEf:
      return "not_ef";
  }
  return "?";
}

namespace {

// Deliberately independent of the bundles module.
Relation Evaluate(const PreferenceModel& pref, ObjectSet own, ObjectSet other,
                  std::uint64_t own_claim, std::uint64_t other_claim) {
  const WideProduct lhs = WideProduct{other_claim} * pref.utility(own);
  const WideProduct rhs = WideProduct{own_claim} * pref.utility(other);
  if (lhs > rhs) return Relation::kStrictlyPrefersOwn;
  if (lhs == rhs) return Relation::kIndifferent;
  return Relation::kEnvies;
}

void CheckSize(const Profile& profile) {
  if (profile.num_objects() > kMaxOracleObjects) {
    throw SizeLimit("oracle enumerates 2^n splits; n = " +
                    std::to_string(profile.num_objects()) + " exceeds " +
                    std::to_string(kMaxOracleObjects));
  }
}

std::vector<SplitClassification> CollectCanonical(
    const Profile& profile, const std::vector<std::uint8_t>& ef) {
  std::vector<SplitClassification> out;
  for (std::size_t s = 0; s < ef.size(); ++s) {
    if (!ef[s]) continue;
    const ObjectSet side(static_cast<ObjectSet::Bits>(s));
    out.push_back(classify_split(
        profile, {side, side.complement_in(profile.universe().all())}));
  }
  std::sort(out.begin(), out.end(),
            [](const SplitClassification& a, const SplitClassification& b) {
              return CanonicalLess(a.split.to_agent1, b.split.to_agent1);
            });
  return out;
}

}  // namespace

SplitClassification classify_split(const Profile& profile, const Split& split) {
  const Claims& c = profile.claims();
  SplitClassification out{split, Relation::kIndifferent, Relation::kIndifferent,
                          Verdict::kNotEf};
  out.agent1 = Evaluate(profile.pref(Agent::kOne), split.to_agent1,
                        split.to_agent2, c.agent1, c.agent2);
  out.agent2 = Evaluate(profile.pref(Agent::kTwo), split.to_agent2,
                        split.to_agent1, c.agent2, c.agent1);
  if (out.agent1 == Relation::kEnvies || out.agent2 == Relation::kEnvies) {
    out.verdict = Verdict::kNotEf;
  } else if (out.agent1 == Relation::kIndifferent &&
             out.agent2 == Relation::kIndifferent) {
    out.verdict = Verdict::kEfTrivial;
  } else {
    out.verdict = Verdict::kEfNontrivial;
  }
  return out;
}

std::vector<SplitClassification> enumerate_ef_splits(const Profile& profile) {
  CheckSize(profile);
  const ObjectSet all = profile.universe().all();
  const auto count = static_cast<std::int64_t>(std::int64_t{1}
                                               << profile.num_objects());
  std::vector<std::uint8_t> ef(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s) {
    const ObjectSet side(static_cast<ObjectSet::Bits>(s));
    ef[s] = classify_split(profile, {side, side.complement_in(all)}).verdict !=
            Verdict::kNotEf;
  }
  return CollectCanonical(profile, ef);
}

std::vector<SplitClassification> enumerate_ef_splits_serial(
    const Profile& profile) {
  CheckSize(profile);
  const ObjectSet all = profile.universe().all();
  std::vector<SplitClassification> out;
  ForEachSubset(all, [&](ObjectSet side) {
    SplitClassification c = classify_split(profile, {side, side.complement_in(all)});
    if (c.verdict != Verdict::kNotEf) out.push_back(c);
  });
  std::sort(out.begin(), out.end(),
            [](const SplitClassification& a, const SplitClassification& b) {
              return CanonicalLess(a.split.to_agent1, b.split.to_agent1);
            });
  return out;
}

bool exists_nontrivial_ef(const Profile& profile) {
  const auto splits = enumerate_ef_splits(profile);
  return std::any_of(splits.begin(), splits.end(), [](const auto& c) {
    return c.verdict == Verdict::kEfNontrivial;
  });
}

}  // namespace fairdiv::oracle
