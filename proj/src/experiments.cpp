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


#include "fairdiv/experiments.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "fairdiv/errors.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv::experiments {
namespace {

std::vector<std::string> Labels(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

PreferenceModel RandomSeparableTable(std::size_t n, Utility perturbation,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<Utility> base(kTableBaseMin, kTableBaseMax);
  std::uniform_int_distribution<int> jitter(-static_cast<int>(perturbation),
                                            static_cast<int>(perturbation));
  std::vector<Utility> values(n);
  for (auto& v : values) v = base(rng);
  const PreferenceModel additive = PreferenceModel::Additive(values);
  std::vector<Utility> table(std::size_t{1} << n);
  for (std::size_t s = 1; s < table.size(); ++s) {
    // Sum >= kTableBaseMin > perturbation, so the entry stays positive.
    const auto sum = static_cast<std::int64_t>(
        additive.utility(ObjectSet(static_cast<ObjectSet::Bits>(s))));
    table[s] = static_cast<Utility>(sum + jitter(rng));
  }
  return PreferenceModel::Table(std::move(table));
}

const char* VerdictName(const std::optional<Classification>& c) {
  return c ? ToString(*c).data() : "error";
}

}  // namespace

void Validate(const BatchConfig& config) {
  if (config.count < 1) throw std::invalid_argument("count must be at least 1");
  const std::size_t cap = config.generator == Generator::kAdditiveUniform
                              ? kMaxBatchAdditiveObjects
                              : kMaxBatchTableObjects;
  if (config.n < 1 || config.n > cap) {
    throw std::invalid_argument("objects must be in [1, " + std::to_string(cap) +
                                "] for this generator");
  }
  if (config.value_min < 1 || config.value_min > config.value_max ||
      config.value_max > kMaxUtility) {
    throw std::invalid_argument("value range must satisfy 1 <= min <= max");
  }
  if (config.claims.agent1 < 1 || config.claims.agent2 < 1 ||
      config.claims.agent1 > kMaxClaim || config.claims.agent2 > kMaxClaim) {
    throw std::invalid_argument("claims must be positive");
  }
}

std::uint64_t ProfileSeed(std::uint64_t batch_seed, std::size_t index) {
  std::uint64_t z = batch_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Profile random_additive_profile(std::size_t n, Utility value_min,
                                Utility value_max, Claims claims,
                                std::uint64_t seed) {
  if (value_min < 1 || value_min > value_max) {
    throw std::invalid_argument("value range must satisfy 1 <= min <= max");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Utility> draw(value_min, value_max);
  std::array<std::vector<Utility>, 2> values;
  for (auto& agent : values) {
    agent.resize(n);
    for (auto& v : agent) v = draw(rng);
  }
  return Profile(ObjectUniverse(Labels(n)), {"1", "2"},
                 {PreferenceModel::Additive(std::move(values[0])),
                  PreferenceModel::Additive(std::move(values[1]))},
                 claims);
}

Profile random_separable_table_profile(std::size_t n, std::uint64_t seed,
                                       Claims claims, Utility perturbation) {
  if (n < 1 || n > kMaxBatchTableObjects) {
    throw std::invalid_argument("separable table profiles need 1 <= n <= " +
                                std::to_string(kMaxBatchTableObjects));
  }
  if (perturbation > kTablePerturbation) {
    throw std::invalid_argument("perturbation too large to keep separability");
  }
  std::mt19937_64 rng(seed);
  PreferenceModel p1 = RandomSeparableTable(n, perturbation, rng);
  PreferenceModel p2 = RandomSeparableTable(n, perturbation, rng);
  for (const PreferenceModel* p : {&p1, &p2}) {
    if (!is_separable(*p).holds || !all_desirable(*p).holds) {
      throw InternalInvariantViolation("generated table is not separable");
    }
  }
  return Profile(ObjectUniverse(Labels(n)), {"1", "2"},
                 {std::move(p1), std::move(p2)}, claims);
}

Profile MakeProfile(const BatchConfig& config, std::uint64_t seed) {
  if (config.generator == Generator::kAdditiveUniform) {
    return random_additive_profile(config.n, config.value_min, config.value_max,
                                   config.claims, seed);
  }
  return random_separable_table_profile(config.n, seed, config.claims);
}

ProfileResult EvaluateProfile(const Profile& profile, std::string id) {
  ProfileResult r;
  r.id = std::move(id);
  r.n = profile.num_objects();
  try {
    const auto splits = oracle::enumerate_ef_splits(profile);
    r.ef_exists = !splits.empty();
    for (const auto& c : splits) {
      r.nontrivial_ef_exists |= c.verdict == oracle::Verdict::kEfNontrivial;
    }

    const Outcome simplified = simplified_undercut(profile);
    r.simplified = simplified.classification;
    bool agrees = simplified.split.has_value() == r.ef_exists;
    if (simplified.split) {
      const auto check = oracle::classify_split(profile, *simplified.split);
      const bool trivial = check.verdict == oracle::Verdict::kEfTrivial;
      agrees = agrees && check.verdict != oracle::Verdict::kNotEf &&
               trivial == (simplified.classification == Classification::kEfTrivial);
    }

    try {
      const Outcome original =
          original_undercut(profile, {Agent::kOne, TieBreak::kIndex});
      r.original = original.classification;
      r.ties_broken = original.ties_broken();
      if (original.split) {
        const auto check = oracle::classify_split(profile, *original.split);
        agrees = agrees && check.verdict != oracle::Verdict::kNotEf &&
                 simplified.split.has_value();
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    r.disagreement = !agrees;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.disagreement = true;
  }
  return r;
}

namespace {

ComparisonStats Tally(std::vector<ProfileResult> results) {
  ComparisonStats stats;
  for (const ProfileResult& r : results) {
    ++stats.total;
    stats.ef_exists += r.ef_exists;
    stats.simplified_found += IsEnvyFree(r.simplified) && r.error.empty();
    const bool original_found = r.original && IsEnvyFree(*r.original);
    stats.original_found += original_found;
    stats.original_deadlocks_with_ef_existing +=
        r.ef_exists && r.original == Classification::kDeadlock;
    stats.ties_broken += r.ties_broken;
    stats.errors += !r.error.empty();
    if (r.disagreement) stats.disagreements.push_back(r.id);
  }
  stats.results = std::move(results);
  return stats;
}

std::vector<std::pair<std::string, std::optional<std::uint64_t>>> Jobs(
    const BatchConfig& config) {
  std::vector<std::pair<std::string, std::optional<std::uint64_t>>> jobs;
  for (std::size_t i = 0; i < config.count; ++i) {
    const std::uint64_t seed = ProfileSeed(config.seed, i);
    jobs.emplace_back(std::to_string(seed), seed);
  }
  for (std::size_t k = 0; k < config.fixtures.size(); ++k) {
    jobs.emplace_back("fixture-" + std::to_string(k), std::nullopt);
  }
  return jobs;
}

ProfileResult RunJob(const BatchConfig& config, std::size_t index,
                     const std::pair<std::string, std::optional<std::uint64_t>>& job) {
  if (job.second) return EvaluateProfile(MakeProfile(config, *job.second), job.first);
  return EvaluateProfile(config.fixtures[index - config.count], job.first);
}

}  // namespace

ComparisonStats compare_procedures(const BatchConfig& config) {
  Validate(config);
  const auto jobs = Jobs(config);
  std::vector<ProfileResult> results(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    results[i] = RunJob(config, static_cast<std::size_t>(i), jobs[i]);
  }
  return Tally(std::move(results));
}

ComparisonStats compare_procedures_serial(const BatchConfig& config) {
  Validate(config);
  const auto jobs = Jobs(config);
  std::vector<ProfileResult> results;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    results.push_back(RunJob(config, i, jobs[i]));
  }
  return Tally(std::move(results));
}

std::string FormatSummary(const ComparisonStats& s) {
  std::ostringstream out;
  out << "total=" << s.total << "\n"
      << "ef_exists=" << s.ef_exists << "\n"
      << "simplified_found=" << s.simplified_found << "\n"
      << "original_found=" << s.original_found << "\n"
      << "original_deadlocks_with_ef_existing="
      << s.original_deadlocks_with_ef_existing << "\n"
      << "ties_broken=" << s.ties_broken << "\n"
      << "errors=" << s.errors << "\n"
      << "disagreements=" << s.disagreements.size() << "\n";
  out << "disagreement_ids=";
  for (std::size_t i = 0; i < s.disagreements.size(); ++i) {
    out << (i ? "," : "") << s.disagreements[i];
  }
  out << "\n";
  return out.str();
}

std::string FormatCsv(const ComparisonStats& s) {
  std::ostringstream out;
  out << "seed,n,ef_exists,simplified_verdict,original_verdict,ties_broken\n";
  for (const ProfileResult& r : s.results) {
    out << r.id << ',' << r.n << ',' << (r.ef_exists ? "true" : "false") << ','
        << ToString(r.simplified) << ',' << VerdictName(r.original) << ','
        << r.ties_broken << "\n";
  }
  return out.str();
}

}  // namespace fairdiv::experiments
