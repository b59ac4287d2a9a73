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


#ifndef FAIRDIV_TESTS_SUPPORT_FIXTURES_HPP_
#define FAIRDIV_TESTS_SUPPORT_FIXTURES_HPP_

#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv::testing {

inline std::string ReadData(const std::string& name) {
  std::ifstream in(std::string(FAIRDIV_DATA_DIR) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::vector<std::string> Letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

inline Profile AdditiveProfile(std::vector<Utility> v1, std::vector<Utility> v2,
                               Claims claims = {}) {
  const std::size_t n = v1.size();
  return Profile(ObjectUniverse(Letters(n)), {"1", "2"},
                 {PreferenceModel::Additive(std::move(v1)),
                  PreferenceModel::Additive(std::move(v2))},
                 claims);
}

inline Profile TableProfile(std::vector<Utility> t1, std::vector<Utility> t2,
                            Claims claims = {}) {
  PreferenceModel p1 = PreferenceModel::Table(std::move(t1));
  PreferenceModel p2 = PreferenceModel::Table(std::move(t2));
  const std::size_t n = p1.num_objects();
  return Profile(ObjectUniverse(Letters(n)), {"1", "2"}, {std::move(p1), std::move(p2)},
                 claims);
}

/// a>b>c>d for agent 1 with {a,d} ~ {b,c}; b>c>d>a for agent 2.
inline Profile Counterexample() { return AdditiveProfile({4, 3, 2, 1}, {1, 4, 3, 2}); }

/// Set over the letter universe, e.g. Set("ad").
inline ObjectSet Set(const std::string& letters) {
  ObjectSet s;
  for (char c : letters) s = s.with(static_cast<std::size_t>(c - 'a'));
  return s;
}

/// Table with u(empty)=0 and other entries uniform in [0, max_value].
inline PreferenceModel RandomTable(std::size_t n, Utility max_value,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<Utility> draw(0, max_value);
  std::vector<Utility> table(std::size_t{1} << n);
  for (std::size_t s = 1; s < table.size(); ++s) table[s] = draw(rng);
  return PreferenceModel::Table(std::move(table));
}

}  // namespace fairdiv::testing

#endif  // FAIRDIV_TESTS_SUPPORT_FIXTURES_HPP_
