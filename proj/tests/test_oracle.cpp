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


#include <algorithm>
#include <random>

#include "doctest.h"
#include "fairdiv/errors.hpp"
#include "fairdiv/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

namespace fairdiv::oracle {
namespace {

using testing::AdditiveProfile;
using testing::Counterexample;
using testing::Set;

std::vector<ObjectSet> Sides(const std::vector<SplitClassification>& splits) {
  std::vector<ObjectSet> out;
  for (const auto& s : splits) out.push_back(s.split.to_agent1);
  return out;
}

TEST_CASE("classify_split") {
  const Profile p = Counterexample();
  SUBCASE("nontrivial with one tight agent") {
    const auto c = classify_split(p, {Set("ad"), Set("bc")});
    CHECK(c.agent1 == Relation::kIndifferent);
    CHECK(c.agent2 == Relation::kStrictlyPrefersOwn);
    CHECK(c.verdict == Verdict::kEfNontrivial);
  }
  SUBCASE("envy") {
    const auto c = classify_split(p, {Set("cd"), Set("ab")});
    CHECK(c.agent1 == Relation::kEnvies);
    CHECK(c.verdict == Verdict::kNotEf);
  }
  SUBCASE("both tight is trivial") {
    const auto c = classify_split(AdditiveProfile({1, 1}, {1, 1}), {Set("a"), Set("b")});
    CHECK(c.verdict == Verdict::kEfTrivial);
  }
  SUBCASE("claims scale the comparison") {
    // 2 * u1({a}) = 8 > 1 * u1({b,c,d}) = 6 although u1({a}) < u1({b,c,d}).
    const Profile w = AdditiveProfile({4, 3, 2, 1}, {1, 4, 3, 2}, {1, 2});
    const auto c = classify_split(w, {Set("a"), Set("bcd")});
    CHECK(c.agent1 == Relation::kStrictlyPrefersOwn);
    CHECK(c.verdict == Verdict::kEfNontrivial);
    CHECK(classify_split(Counterexample(), {Set("a"), Set("bcd")}).agent1 == Relation::kEnvies);
    // 2 * u1({a}) = 2 == 1 * u1({b}).
    const Profile tight = AdditiveProfile({1, 2}, {1, 1}, {1, 2});
    CHECK(classify_split(tight, {Set("a"), Set("b")}).agent1 == Relation::kIndifferent);
  }
}

TEST_CASE("enumerate_ef_splits") {
  SUBCASE("counterexample") {
    const auto splits = enumerate_ef_splits(Counterexample());
    CHECK(Sides(splits) == std::vector<ObjectSet>{Set("ab"), Set("ac"), Set("ad")});
    for (const auto& s : splits) CHECK(s.verdict == Verdict::kEfNontrivial);
    CHECK(exists_nontrivial_ef(Counterexample()));
  }
  SUBCASE("identical strict preferences") {
    const Profile p = AdditiveProfile({2, 1}, {2, 1});
    CHECK(enumerate_ef_splits(p).empty());
    CHECK_FALSE(exists_nontrivial_ef(p));
  }
  SUBCASE("only trivial splits") {
    const Profile p = AdditiveProfile({1, 1}, {1, 1});
    CHECK(Sides(enumerate_ef_splits(p)) == std::vector<ObjectSet>{Set("a"), Set("b")});
    CHECK_FALSE(exists_nontrivial_ef(p));
  }
  SUBCASE("size limit") {
    const std::vector<Utility> ones(21, 1);
    CHECK_THROWS_AS(enumerate_ef_splits(AdditiveProfile(ones, ones)), SizeLimit);
    const std::vector<Utility> twenty(20, 1);
    CHECK_NOTHROW(exists_nontrivial_ef(AdditiveProfile(twenty, twenty)));
  }
}

TEST_CASE("oracle matches brute force and its serial reference") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 6;
    const Claims claims{1 + rng() % 3, 1 + rng() % 3};
    Profile p = Counterexample();
    if (i % 2 == 0) {
      std::vector<Utility> v1(n), v2(n);
      for (auto& v : v1) v = rng() % 6;
      for (auto& v : v2) v = rng() % 6;
      p = AdditiveProfile(v1, v2, claims);
    } else {
      p = Profile(ObjectUniverse(testing::Letters(n)), {"1", "2"},
                  {testing::RandomTable(n, 9, rng), testing::RandomTable(n, 9, rng)}, claims);
    }
    const auto fast = enumerate_ef_splits(p);
    CHECK(fast == enumerate_ef_splits_serial(p));
    auto brute = testing::brute::EfSplits(p);
    std::sort(brute.begin(), brute.end(), [](const auto& x, const auto& y) {
      return CanonicalLess(testing::brute::ToSet(x.agent1), testing::brute::ToSet(y.agent1));
    });
    REQUIRE(fast.size() == brute.size());
    bool nontrivial = false;
    for (std::size_t k = 0; k < fast.size(); ++k) {
      CHECK(fast[k].split.to_agent1 == testing::brute::ToSet(brute[k].agent1));
      CHECK((fast[k].verdict == Verdict::kEfTrivial) == brute[k].trivial);
      nontrivial |= !brute[k].trivial;
    }
    CHECK(exists_nontrivial_ef(p) == nontrivial);
  }
}

TEST_CASE("swapping agents mirrors every split") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 6;
    std::vector<Utility> v1(n), v2(n);
    for (auto& v : v1) v = 1 + rng() % 5;
    for (auto& v : v2) v = 1 + rng() % 5;
    const Claims claims{1 + rng() % 3, 1 + rng() % 3};
    const Profile p = AdditiveProfile(v1, v2, claims);
    const Profile q = AdditiveProfile(v2, v1, {claims.agent2, claims.agent1});
    const auto a = enumerate_ef_splits(p);
    const auto b = enumerate_ef_splits(q);
    REQUIRE(a.size() == b.size());
    for (const auto& s : a) {
      const auto m = classify_split(q, {s.split.to_agent2, s.split.to_agent1});
      CHECK(m.verdict == s.verdict);
      CHECK(m.agent1 == s.agent2);
    }
  }
}

TEST_CASE("every enumerated split classifies as envy-free") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 8;
    std::vector<Utility> v1(n), v2(n);
    for (auto& v : v1) v = rng() % 4;
    for (auto& v : v2) v = rng() % 4;
    const Profile p = AdditiveProfile(v1, v2);
    for (const auto& s : enumerate_ef_splits(p)) {
      CHECK(s == classify_split(p, s.split));
      CHECK((s.split.to_agent1 | s.split.to_agent2) == p.universe().all());
      CHECK((s.split.to_agent1 & s.split.to_agent2).empty());
    }
  }
}

}  // namespace
}  // namespace fairdiv::oracle
