// Copyright 2026 The ecloner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "ecloner/cloning_circuits.h"
#include "ecloner/criteria.h"
#include "ecloner/fidelity.h"
#include "ecloner/monte_carlo.h"
#include "ecloner/sweep.h"

namespace {

void BM_LocalEcloner(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ecloner::run_machine(ecloner::Machine::kLocal, 0.3));
}
BENCHMARK(BM_LocalEcloner);

void BM_GlobalEcloner(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ecloner::run_machine(ecloner::Machine::kGlobal, 0.3));
}
BENCHMARK(BM_GlobalEcloner);

void BM_Fidelity(benchmark::State& state) {
    const ecloner::GaussianState epr = ecloner::epr_source(0.3);
    const ecloner::GaussianState clone = ecloner::global_ecloner(epr, 0.3).clone(1);
    for (auto _ : state) benchmark::DoNotOptimize(ecloner::pure_mixed_fidelity(epr, clone));
}
BENCHMARK(BM_Fidelity);

void BM_MonteCarlo(benchmark::State& state) {
    ecloner::SampleConfig config;
    config.machine = ecloner::Machine::kGlobal;
    config.v_s = 0.5;
    config.shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ecloner::sample_circuit(config));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
    ecloner::SweepOptions options;
    options.points = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ecloner::run_sweep(options));
}
BENCHMARK(BM_Sweep)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
