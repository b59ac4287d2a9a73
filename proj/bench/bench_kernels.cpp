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


// Serial reference vs OpenMP kernel for the three data-parallel paths.

#include <benchmark/benchmark.h>

#include <vector>

#include "fairdiv/bundles.hpp"
#include "fairdiv/experiments.hpp"
#include "fairdiv/oracle.hpp"

namespace {

using namespace fairdiv;

Profile SampleAdditive(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("o" + std::to_string(i));
  std::vector<Utility> v1(n), v2(n);
  for (std::size_t i = 0; i < n; ++i) {
    v1[i] = 1 + i % 5;
    v2[i] = 1 + (3 * i) % 7;
  }
  return Profile(ObjectUniverse(names), {"1", "2"},
                 {PreferenceModel::Additive(v1), PreferenceModel::Additive(v2)}, {});
}

void BM_OracleParallel(benchmark::State& state) {
  const Profile p = SampleAdditive(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_ef_splits(p));
}
void BM_OracleSerial(benchmark::State& state) {
  const Profile p = SampleAdditive(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_ef_splits_serial(p));
}
BENCHMARK(BM_OracleParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BundlesKernel(benchmark::State& state) {
  const Profile p = SampleAdditive(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_bundles(p, Agent::kOne, p.universe().all()));
  }
}
void BM_BundlesSerial(benchmark::State& state) {
  const Profile p = SampleAdditive(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_bundles_serial(p.pref(Agent::kOne), p.universe().all(),
                                                    p.claims().For(Agent::kOne)));
  }
}
BENCHMARK(BM_BundlesKernel)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BundlesSerial)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

experiments::BatchConfig Batch() {
  experiments::BatchConfig c;
  c.count = 2000;
  c.n = 7;
  c.seed = 1;
  return c;
}
void BM_CompareParallel(benchmark::State& state) {
  const auto c = Batch();
  for (auto _ : state) benchmark::DoNotOptimize(experiments::compare_procedures(c));
}
void BM_CompareSerial(benchmark::State& state) {
  const auto c = Batch();
  for (auto _ : state) benchmark::DoNotOptimize(experiments::compare_procedures_serial(c));
}
BENCHMARK(BM_CompareParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
