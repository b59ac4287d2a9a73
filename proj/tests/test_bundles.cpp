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


#include <random>
#include <set>

#include "doctest.h"
#include "fairdiv/bundles.hpp"
#include "fairdiv/experiments.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

namespace fairdiv {
namespace {

using testing::Set;

const ClaimPair kEqual{1, 1};
const ObjectSet kAll = Set("abcd");

PreferenceModel U1() { return PreferenceModel::Additive({4, 3, 2, 1}); }
PreferenceModel U2() { return PreferenceModel::Additive({1, 4, 3, 2}); }

std::set<testing::brute::Items> AsItems(const MinimalBundleFamily& f) {
  std::set<testing::brute::Items> out;
  for (ObjectSet s : f.bundles) {
    const auto m = s.members();
    out.emplace(m.begin(), m.end());
  }
  return out;
}

testing::brute::Items ItemsOf(ObjectSet s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

TEST_CASE("is_acceptable") {
  CHECK(is_acceptable(U1(), Set("ad"), kAll, kEqual));  // 5 >= 5
  CHECK_FALSE(is_acceptable(U1(), Set(""), kAll, kEqual));
  const PreferenceModel flat = PreferenceModel::Additive({1, 1});
  CHECK_FALSE(is_acceptable(flat, Set("a"), Set("ab"), ClaimPair{2, 1}));
  CHECK(is_acceptable(flat, Set("a"), Set("ab"), ClaimPair{1, 2}));
  CHECK(is_acceptable(flat, Set("a"), Set("ab"), kEqual));
}

TEST_CASE("is_minimal_bundle") {
  CHECK(is_minimal_bundle(U1(), Set("ad"), kAll, kEqual));
  CHECK_FALSE(is_minimal_bundle(U1(), Set(""), kAll, kEqual));
  CHECK_FALSE(is_minimal_bundle(U1(), Set("abd"), kAll, kEqual));
  const PreferenceModel one = PreferenceModel::Additive({3});
  CHECK(is_minimal_bundle(one, Set("a"), Set("a"), kEqual));
}

TEST_CASE("minimal_bundles examples") {
  SUBCASE("contested pile {c,d}") {
    const auto f1 = minimal_bundles(U1(), Set("cd"), kEqual, Agent::kOne);
    const auto f2 = minimal_bundles(U2(), Set("cd"), kEqual, Agent::kTwo);
    CHECK(f1.bundles == std::vector<ObjectSet>{Set("c")});
    CHECK(f2.bundles == std::vector<ObjectSet>{Set("c")});
    CHECK(f2.agent == Agent::kTwo);
  }
  SUBCASE("full ground, frozen from exhaustive enumeration") {
    const auto f1 = minimal_bundles(U1(), kAll, kEqual);
    CHECK(f1.contains(Set("ad")));
    CHECK(f1.contains(Set("bc")));
    for (ObjectSet s : f1.bundles) CHECK(s.size() > 1);
    CHECK(f1.bundles == std::vector<ObjectSet>{Set("ab"), Set("ac"), Set("ad"), Set("bc")});
    CHECK(minimal_bundles(U2(), kAll, kEqual).bundles ==
          std::vector<ObjectSet>{Set("ab"), Set("bc"), Set("bd"), Set("cd")});
  }
  SUBCASE("two objects") {
    CHECK(minimal_bundles(PreferenceModel::Additive({2, 1}), Set("ab"), kEqual).bundles ==
          std::vector<ObjectSet>{Set("a")});
    CHECK(minimal_bundles(PreferenceModel::Additive({1, 2}), Set("ab"), kEqual).bundles ==
          std::vector<ObjectSet>{Set("b")});
  }
  SUBCASE("bad ground") {
    CHECK_THROWS_AS(minimal_bundles(U1(), Set(""), kEqual), std::invalid_argument);
    CHECK_THROWS_AS(minimal_bundles(U1(), Set("ae"), kEqual), std::invalid_argument);
  }
}

TEST_CASE("kernel, serial reference and definition agree (n <= 10)") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 10;
    PreferenceModel p = (trial % 3 == 0 && n <= 8)
                            ? testing::RandomTable(n, 15, rng)
                            : experiments::random_additive_profile(n, 1, 6, {}, rng())
                                  .pref(Agent::kOne);
    const ObjectSet all = ObjectSet::Full(n);
    ObjectSet ground(static_cast<ObjectSet::Bits>(rng()) & all.bits());
    if (ground.empty()) ground = all;
    const ClaimPair claims{1 + rng() % 3, 1 + rng() % 3};

    const auto fast = minimal_bundles(p, ground, claims);
    const auto slow = minimal_bundles_serial(p, ground, claims);
    CHECK(fast.bundles == slow.bundles);
    if (ground.size() <= 8) {
      CHECK(AsItems(fast) ==
            testing::brute::MinimalBundles(p, ItemsOf(ground), claims.own, claims.other));
    }
    // Canonical order and antichain.
    CHECK(std::is_sorted(fast.bundles.begin(), fast.bundles.end(), CanonicalOrder{}));
    for (ObjectSet a : fast.bundles) {
      CHECK(is_minimal_bundle(p, a, ground, claims));
      for (ObjectSet b : fast.bundles) {
        if (a != b) CHECK_FALSE(a.is_subset_of(b));
      }
    }
  }
}

TEST_CASE("minimal bundles over a 24-object ground") {
  std::vector<Utility> values(24, 1);
  const auto f = minimal_bundles(PreferenceModel::Additive(values), ObjectSet::Full(24), kEqual);
  // Every 12-subset is minimal under equal unit values.
  CHECK(f.size() == 2704156);
  CHECK(f.bundles.front() == ObjectSet::Full(12));
}

std::vector<PreferenceModel> SeparablePopulation() {
  std::vector<PreferenceModel> out;
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 10;
    if (n <= 5) {
      out.push_back(experiments::random_separable_table_profile(n, rng()).pref(Agent::kOne));
    } else {
      out.push_back(
          experiments::random_additive_profile(n, 1, 5, {}, rng()).pref(Agent::kTwo));
    }
  }
  return out;
}

TEST_CASE("acceptability is upward closed for separable preferences") {
  for (const PreferenceModel& p : SeparablePopulation()) {
    const ObjectSet all = ObjectSet::Full(p.num_objects());
    ForEachSubset(all, [&](ObjectSet s) {
      if (!is_acceptable(p, s, all, kEqual)) return;
      for (std::size_t x : s.complement_in(all).members()) {
        CHECK(is_acceptable(p, s.with(x), all, kEqual));
      }
    });
  }
}

TEST_CASE("complement of a tight minimal bundle is minimal") {
  int tight = 0;
  for (const PreferenceModel& p : SeparablePopulation()) {
    const ObjectSet all = ObjectSet::Full(p.num_objects());
    const auto family = minimal_bundles(p, all, kEqual);
    for (ObjectSet s : family.bundles) {
      if (p.utility(s) == p.utility(s.complement_in(all))) {
        ++tight;
        CHECK(family.contains(s.complement_in(all)));
      }
    }
  }
  CHECK(tight > 0);
}

TEST_CASE("claims scale invariance") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const PreferenceModel p =
        experiments::random_additive_profile(n, 1, 9, {}, rng()).pref(Agent::kOne);
    const ObjectSet all = ObjectSet::Full(n);
    const ClaimPair base{1 + rng() % 3, 1 + rng() % 3};
    for (std::uint64_t k : {2u, 3u, 7u}) {
      CHECK(minimal_bundles(p, all, base).bundles ==
            minimal_bundles(p, all, {k * base.own, k * base.other}).bundles);
      CHECK(minimal_bundles(p, all, kEqual).bundles ==
            minimal_bundles(p, all, {k, k}).bundles);
    }
  }
}

TEST_CASE("weighted upward closure on tables is recorded, not asserted") {
  std::mt19937_64 rng(31);
  int violations = 0;
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PreferenceModel p =
        experiments::random_separable_table_profile(1 + trial % 5, rng()).pref(Agent::kOne);
    const ObjectSet all = ObjectSet::Full(p.num_objects());
    for (const ClaimPair claims : {ClaimPair{1, 2}, ClaimPair{2, 3}, ClaimPair{3, 1}}) {
      ForEachSubset(all, [&](ObjectSet s) {
        if (!is_acceptable(p, s, all, claims)) return;
        for (std::size_t x : s.complement_in(all).members()) {
          ++checked;
          violations += !is_acceptable(p, s.with(x), all, claims);
        }
      });
    }
  }
  MESSAGE("weighted upward-closure violations on separable tables: ", violations, " of ",
          checked);
  CHECK(checked > 0);
}

}  // namespace
}  // namespace fairdiv
