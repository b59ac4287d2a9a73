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


#ifndef FAIRDIV_BUNDLES_HPP_
#define FAIRDIV_BUNDLES_HPP_

#include <algorithm>
#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/object_set.hpp"

namespace fairdiv {

/// other * u(S) >= own * u(ground - S), evaluated exactly. With claims
/// (1, 1) this is "S is weakly preferred to its complement".
bool is_acceptable(const PreferenceModel& pref, ObjectSet s, ObjectSet ground,
                   ClaimPair claims);

/// Acceptable, and every proper subset is strictly unacceptable.
bool is_minimal_bundle(const PreferenceModel& pref, ObjectSet s,
                       ObjectSet ground, ClaimPair claims);

/// The minimal bundles of one agent over one ground set, in canonical order.
/// Always an antichain.
struct MinimalBundleFamily {
  Agent agent = Agent::kOne;
  ObjectSet ground;
  std::vector<ObjectSet> bundles;

  bool contains(ObjectSet s) const {
    return std::binary_search(bundles.begin(), bundles.end(), s,
                              CanonicalOrder{});
  }
  std::size_t size() const { return bundles.size(); }
};

/// Same ground and same bundles, regardless of owner.
inline bool SameBundles(const MinimalBundleFamily& a,
                        const MinimalBundleFamily& b) {
  return a.ground == b.ground && a.bundles == b.bundles;
}

/// Enumerates all minimal bundles over `ground` (1 <= |ground| <= 24).
/// Evaluates acceptability of every subset in parallel, then propagates
/// "has an acceptable subset" upward one dimension at a time.
MinimalBundleFamily minimal_bundles(const PreferenceModel& pref,
                                    ObjectSet ground, ClaimPair claims,
                                    Agent agent = Agent::kOne);

inline MinimalBundleFamily minimal_bundles(const Profile& profile, Agent agent,
                                           ObjectSet ground) {
  return minimal_bundles(profile.pref(agent), ground,
                         profile.claims().For(agent), agent);
}

/// Serial reference: runs is_minimal_bundle on every subset, O(3^|ground|).
/// Kept for cross-checking the parallel kernel.
MinimalBundleFamily minimal_bundles_serial(const PreferenceModel& pref,
                                           ObjectSet ground, ClaimPair claims,
                                           Agent agent = Agent::kOne);

}  // namespace fairdiv

#endif  // FAIRDIV_BUNDLES_HPP_
