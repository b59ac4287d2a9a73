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


// Definitional checks used only by tests. Sets are std::set<size_t>; the
// library is touched only through PreferenceModel::utility.

#ifndef FAIRDIV_TESTS_SUPPORT_BRUTE_FORCE_HPP_
#define FAIRDIV_TESTS_SUPPORT_BRUTE_FORCE_HPP_

#include <algorithm>
#include <set>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv::testing::brute {

using Items = std::set<std::size_t>;

inline ObjectSet ToSet(const Items& items) {
  ObjectSet s;
  for (std::size_t i : items) s = s.with(i);
  return s;
}

inline std::vector<Items> PowerSet(const Items& ground) {
  std::vector<Items> out{{}};
  for (std::size_t x : ground) {
    const std::size_t size = out.size();
    for (std::size_t k = 0; k < size; ++k) {
      Items bigger = out[k];
      bigger.insert(x);
      out.push_back(std::move(bigger));
    }
  }
  return out;
}

inline Items Range(std::size_t n) {
  Items out;
  for (std::size_t i = 0; i < n; ++i) out.insert(i);
  return out;
}

inline Items Minus(const Items& a, const Items& b) {
  Items out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

inline Utility U(const PreferenceModel& p, const Items& s) { return p.utility(ToSet(s)); }

// own/other as in c_own / c_other weighting; long double is exact for the
// small utilities and claims used in tests.
inline bool Acceptable(const PreferenceModel& p, const Items& s, const Items& ground,
                       std::uint64_t own, std::uint64_t other) {
  return static_cast<long double>(U(p, s)) * other >=
         static_cast<long double>(U(p, Minus(ground, s))) * own;
}

inline std::set<Items> MinimalBundles(const PreferenceModel& p, const Items& ground,
                                      std::uint64_t own = 1, std::uint64_t other = 1) {
  std::set<Items> out;
  for (const Items& s : PowerSet(ground)) {
    if (!Acceptable(p, s, ground, own, other)) continue;
    bool minimal = true;
    for (const Items& t : PowerSet(s)) {
      if (t != s && Acceptable(p, t, ground, own, other)) minimal = false;
    }
    if (minimal) out.insert(s);
  }
  return out;
}

inline bool Separable(const PreferenceModel& p) {
  const Items all = Range(p.num_objects());
  for (std::size_t x : all) {
    const bool desirable = U(p, {x}) > U(p, {});
    const bool neutral = U(p, {x}) == U(p, {});
    for (const Items& s : PowerSet(all)) {
      if (s.count(x)) continue;
      Items sx = s;
      sx.insert(x);
      if (desirable != (U(p, sx) > U(p, s))) return false;
      if (neutral != (U(p, sx) == U(p, s))) return false;
    }
  }
  return true;
}

inline bool Responsive(const PreferenceModel& p) {
  const Items all = Range(p.num_objects());
  for (const Items& s : PowerSet(all)) {
    for (std::size_t x : all) {
      for (std::size_t y : all) {
        if (x == y || s.count(x) || s.count(y)) continue;
        Items sx = s, sy = s;
        sx.insert(x);
        sy.insert(y);
        if ((U(p, sx) >= U(p, sy)) != (U(p, {x}) >= U(p, {y}))) return false;
      }
    }
  }
  return Separable(p);
}

inline bool AllDesirable(const PreferenceModel& p) {
  for (std::size_t x : Range(p.num_objects())) {
    if (U(p, {x}) <= U(p, {})) return false;
  }
  return true;
}

/// Agent-1 sides of all envy-free splits, and whether each is trivial.
struct EfSplit {
  Items agent1;
  bool trivial;
};

inline std::vector<EfSplit> EfSplits(const Profile& profile) {
  const Items all = Range(profile.num_objects());
  const auto& c = profile.claims();
  const auto& p1 = profile.pref(Agent::kOne);
  const auto& p2 = profile.pref(Agent::kTwo);
  std::vector<EfSplit> out;
  for (const Items& s : PowerSet(all)) {
    const Items rest = Minus(all, s);
    const long double l1 = static_cast<long double>(U(p1, s)) * c.agent2;
    const long double r1 = static_cast<long double>(U(p1, rest)) * c.agent1;
    const long double l2 = static_cast<long double>(U(p2, rest)) * c.agent1;
    const long double r2 = static_cast<long double>(U(p2, s)) * c.agent2;
    if (l1 >= r1 && l2 >= r2) out.push_back({s, l1 == r1 && l2 == r2});
  }
  return out;
}

}  // namespace fairdiv::testing::brute

#endif  // FAIRDIV_TESTS_SUPPORT_BRUTE_FORCE_HPP_
