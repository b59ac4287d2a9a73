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


#ifndef FAIRDIV_ORACLE_HPP_
#define FAIRDIV_ORACLE_HPP_

#include <string_view>
#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/undercut.hpp"

namespace fairdiv::oracle {

/// Exhaustive enumeration is limited to 2^20 splits.
inline constexpr std::size_t kMaxOracleObjects = 20;

enum class Relation { kStrictlyPrefersOwn, kIndifferent, kEnvies };
enum class Verdict { kEfTrivial, kEfNontrivial, kNotEf };

std::string_view ToString(Relation r);
std::string_view ToString(Verdict v);

struct SplitClassification {
  Split split;
  Relation agent1;
  Relation agent2;
  Verdict verdict;

  Relation relation(Agent a) const { return a == Agent::kOne ? agent1 : agent2; }
  friend bool operator==(const SplitClassification&,
                         const SplitClassification&) = default;
};

/// Compares c_other * u(own) with c_own * u(other) for each agent.
SplitClassification classify_split(const Profile& profile, const Split& split);

/// Every envy-free split of the universe, ordered canonically by agent 1's
/// side. Splits are classified in parallel. Throws SizeLimit above
/// kMaxOracleObjects.
std::vector<SplitClassification> enumerate_ef_splits(const Profile& profile);

/// Single-threaded reference for enumerate_ef_splits.
std::vector<SplitClassification> enumerate_ef_splits_serial(
    const Profile& profile);

bool exists_nontrivial_ef(const Profile& profile);

}  // namespace fairdiv::oracle

#endif  // FAIRDIV_ORACLE_HPP_
