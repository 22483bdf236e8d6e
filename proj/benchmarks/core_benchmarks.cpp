// Copyright 2026 The bdorder Authors
//
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

#include <benchmark/benchmark.h>

#include "bdorder/blocks.hpp"
#include "bdorder/characters.hpp"
#include "bdorder/combinatorics.hpp"
#include "bdorder/corder.hpp"
#include "bdorder/exactmath.hpp"

namespace {

using namespace bdorder;

void BM_EnumerateMultipartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_multipartitions(3, n));
}
BENCHMARK(BM_EnumerateMultipartitions)->DenseRange(2, 8, 2);

void BM_DominanceCovers(benchmark::State& state) {
  const auto labels = enumerate_multipartitions(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& mu : labels) benchmark::DoNotOptimize(dominance_covers(mu));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(labels.size()));
}
BENCHMARK(BM_DominanceCovers)->DenseRange(2, 6, 2);

void BM_BuildOrderPoset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::optional<Rational>> h_r{Rational(0), Rational(n), Rational(2 * n + 1)};
  const ParameterSet params(3, n, Rational(-1), h_r);
  for (auto _ : state) benchmark::DoNotOptimize(build_order_poset(params));
}
BENCHMARK(BM_BuildOrderPoset)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

void BM_RestrictionBruteForce(benchmark::State& state) {
  const Multipartition lambda = Multipartition::parse(state.range(0) == 3 ? "[2|1|]" : "[2|1|1]");
  for (auto _ : state) benchmark::DoNotOptimize(restriction_profile_bruteforce(lambda));
}
BENCHMARK(BM_RestrictionBruteForce)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Cyclotomic(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic(m));
}
BENCHMARK(BM_Cyclotomic)->Arg(30)->Arg(210)->Arg(720);

void BM_PoincareMultiplicity(benchmark::State& state) {
  const std::vector<int> e8{2, 8, 12, 14, 18, 20, 24, 30};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclotomic_multiplicity(poincare_polynomial(e8), 30));
  }
}
BENCHMARK(BM_PoincareMultiplicity);

void BM_OrbitProbe(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit_c_identity_probe(3, 1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OrbitProbe)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
