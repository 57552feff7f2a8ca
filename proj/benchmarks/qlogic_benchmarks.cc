// Copyright 2026 The qlogic Authors
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

#include "benchmark/benchmark.h"

#include "qlogic/annex.h"
#include "qlogic/assumptions.h"
#include "qlogic/grover.h"
#include "qlogic/random.h"
#include "qlogic/teleport.h"

namespace qlogic {
namespace {

void BM_GroverSweep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const GroverInstance inst = build_instance(n, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(inst, 20));
    }
    state.SetItemsProcessed(state.iterations() * 21);
}
BENCHMARK(BM_GroverSweep)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GroverBuildInstance(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_instance(n, 1, 1));
    }
}
BENCHMARK(BM_GroverBuildInstance)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_TeleportRun(benchmark::State& state) {
    const TeleportSystem sys = build_system();
    Rng rng(0);
    const InputProperty x = InputProperty::random(rng);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(sys, x, seed++));
    }
}
BENCHMARK(BM_TeleportRun)->Unit(benchmark::kMicrosecond);

void BM_TeleportConditions(benchmark::State& state) {
    const TeleportSystem sys = build_system();
    Rng rng(1);
    const InputProperty x = InputProperty::random(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_conditions(sys, x));
    }
}
BENCHMARK(BM_TeleportConditions)->Unit(benchmark::kMicrosecond);

void BM_AssumptionSuite(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const RandomSpec spec{dim, 1, (dim + 1) / 2, 100, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(spec));
    }
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_AssumptionSuite)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_AnnexSweep(benchmark::State& state) {
    const std::vector<double> grid = annex::default_p_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(annex::sweep(grid, 30));
    }
}
BENCHMARK(BM_AnnexSweep)->Unit(benchmark::kMillisecond);

void BM_HermitianEig(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const HermitianOperator h = random_hermitian(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(h.matrix()));
    }
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(4)->Range(8, 512)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace qlogic

BENCHMARK_MAIN();
