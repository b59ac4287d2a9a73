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


#include "fairdiv/bundles.hpp"

#include <cstdint>
#include <stdexcept>

namespace fairdiv {

bool is_acceptable(const PreferenceModel& pref, ObjectSet s, ObjectSet ground,
                   ClaimPair claims) {
  return WideProduct{claims.other} * pref.utility(s) >=
         WideProduct{claims.own} * pref.utility(s.complement_in(ground));
}

bool is_minimal_bundle(const PreferenceModel& pref, ObjectSet s,
                       ObjectSet ground, ClaimPair claims) {
  if (!s.is_subset_of(ground) || !is_acceptable(pref, s, ground, claims)) {
    return false;
  }
  bool minimal = true;
  ForEachSubset(s, [&](ObjectSet t) {
    if (minimal && t != s && is_acceptable(pref, t, ground, claims)) {
      minimal = false;
    }
  });
  return minimal;
}

namespace {

void CheckGround(const PreferenceModel& pref, ObjectSet ground) {
  if (ground.empty() ||
      !ground.is_subset_of(ObjectSet::Full(pref.num_objects()))) {
    throw std::invalid_argument(
        "minimal_bundles: ground must be a non-empty subset of the universe");
  }
}

}  // namespace

MinimalBundleFamily minimal_bundles(const PreferenceModel& pref,
                                    ObjectSet ground, ClaimPair claims,
                                    Agent agent) {
  CheckGround(pref, ground);
  const SubsetIndexer indexer(ground);
  const auto count = static_cast<std::int64_t>(indexer.count());
  const std::size_t rank = indexer.rank();

  // reach[i]: some subset of i (including i) is acceptable.
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    reach[i] = is_acceptable(pref, indexer.Deposit(i), ground, claims);
  }
  for (std::size_t b = 0; b < rank; ++b) {
    const std::int64_t bit = std::int64_t{1} << b;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      if ((i & bit) != 0) reach[i] |= reach[i ^ bit];
    }
  }

  // Minimal iff reachable but no immediate predecessor is.
  std::vector<std::uint8_t> minimal(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    if (!reach[i]) continue;
    bool below = false;
    for (std::int64_t rest = i; rest != 0 && !below; rest &= rest - 1) {
      below = reach[i ^ (rest & -rest)] != 0;
    }
    minimal[i] = !below;
  }

  MinimalBundleFamily family{agent, ground, {}};
  for (std::int64_t i = 0; i < count; ++i) {
    if (minimal[i]) family.bundles.push_back(indexer.Deposit(i));
  }
  std::sort(family.bundles.begin(), family.bundles.end(), CanonicalOrder{});
  return family;
}

MinimalBundleFamily minimal_bundles_serial(const PreferenceModel& pref,
                                           ObjectSet ground, ClaimPair claims,
                                           Agent agent) {
  CheckGround(pref, ground);
  MinimalBundleFamily family{agent, ground, {}};
  ForEachSubset(ground, [&](ObjectSet s) {
    if (is_minimal_bundle(pref, s, ground, claims)) family.bundles.push_back(s);
  });
  std::sort(family.bundles.begin(), family.bundles.end(), CanonicalOrder{});
  return family;
}

}  // namespace fairdiv
