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


#ifndef FAIRDIV_EXPERIMENTS_HPP_
#define FAIRDIV_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/undercut.hpp"

namespace fairdiv::experiments {

enum class Generator { kAdditiveUniform, kSeparableTable };

inline constexpr std::size_t kMaxBatchAdditiveObjects = 8;
inline constexpr std::size_t kMaxBatchTableObjects = 5;

/// Per-object base values of the separable table generator are drawn from
/// [kTableBaseMin, kTableBaseMax]; perturbations lie in
/// [-kTablePerturbation, kTablePerturbation].
inline constexpr Utility kTableBaseMin = 4;
inline constexpr Utility kTableBaseMax = 12;
inline constexpr Utility kTablePerturbation = 1;
static_assert(2 * kTablePerturbation < kTableBaseMin,
              "perturbation must keep every object strictly improving");

struct BatchConfig {
  std::size_t count = 1;
  std::size_t n = 4;
  Generator generator = Generator::kAdditiveUniform;
  Utility value_min = 1;
  Utility value_max = 10;
  Claims claims;
  std::uint64_t seed = 0;
  /// Extra profiles evaluated after the generated ones.
  std::vector<Profile> fixtures;
};

/// Throws std::invalid_argument when the config breaks its invariants.
void Validate(const BatchConfig& config);

/// Seed of the index-th generated profile (SplitMix64 of the batch seed).
std::uint64_t ProfileSeed(std::uint64_t batch_seed, std::size_t index);

/// Objects are named a, b, c, ... and agents 1 and 2.
Profile random_additive_profile(std::size_t n, Utility value_min,
                                Utility value_max, Claims claims,
                                std::uint64_t seed);

/// u(S) = sum of base values + perturbation(S), perturbation(empty) = 0.
/// Strictly monotone under inclusion, hence separable with every object
/// desirable. n <= kMaxBatchTableObjects, perturbation <= kTablePerturbation.
Profile random_separable_table_profile(
    std::size_t n, std::uint64_t seed, Claims claims = {},
    Utility perturbation = kTablePerturbation);

/// Regenerates the profile a batch evaluates for `seed`.
Profile MakeProfile(const BatchConfig& config, std::uint64_t seed);

struct ProfileResult {
  std::string id;  // decimal seed, or "fixture-<k>"
  std::size_t n = 0;
  bool ef_exists = false;
  bool nontrivial_ef_exists = false;
  Classification simplified = Classification::kNoEfExists;
  std::optional<Classification> original;  // nullopt if it raised
  std::size_t ties_broken = 0;
  bool disagreement = false;
  std::string error;

  friend bool operator==(const ProfileResult&, const ProfileResult&) = default;
};

/// Oracle, simplified procedure and original procedure (index tie-break) on
/// one profile. Errors are captured in the result.
ProfileResult EvaluateProfile(const Profile& profile, std::string id);

struct ComparisonStats {
  std::size_t total = 0;
  std::size_t ef_exists = 0;
  std::size_t simplified_found = 0;
  std::size_t original_found = 0;
  std::size_t original_deadlocks_with_ef_existing = 0;
  std::size_t ties_broken = 0;
  std::size_t errors = 0;
  /// Ids of profiles where the simplified procedure disagrees with the
  /// oracle, or the original finds a split the simplified one misses.
  std::vector<std::string> disagreements;
  std::vector<ProfileResult> results;

  friend bool operator==(const ComparisonStats&,
                         const ComparisonStats&) = default;
};

/// Evaluates profiles in parallel; tallies are merged in index order so the
/// result does not depend on scheduling.
ComparisonStats compare_procedures(const BatchConfig& config);
ComparisonStats compare_procedures_serial(const BatchConfig& config);

/// Flat "key=value" lines.
std::string FormatSummary(const ComparisonStats& stats);
/// Header "seed,n,ef_exists,simplified_verdict,original_verdict,ties_broken".
std::string FormatCsv(const ComparisonStats& stats);

}  // namespace fairdiv::experiments

#endif  // FAIRDIV_EXPERIMENTS_HPP_
