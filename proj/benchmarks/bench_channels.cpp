// Copyright 2026 The revtherm Authors
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

#include "revtherm/channels.hpp"
#include "revtherm/random.hpp"

namespace {

using namespace revtherm;

channels::DilationSpec random_spec(std::size_t ds, std::size_t de) {
    random::Engine rng(21);
    return {ds, de, random::unitary(ds * de, rng), random::density(de, rng)};
}

void BM_ExtractSystemKraus(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto spec = random_spec(d, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(channels::extract_system_kraus(spec));
    }
}
BENCHMARK(BM_ExtractSystemKraus)->DenseRange(2, 8, 2);

void BM_ApplyDilation(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto spec = random_spec(d, d);
    random::Engine rng(22);
    const auto rho = random::density(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(channels::apply_dilation(spec, rho));
    }
}
BENCHMARK(BM_ApplyDilation)->DenseRange(2, 8, 2);

void BM_HeatDecomposition(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    random::Engine rng(23);
    const quantum::ThermoContext env(quantum::Hamiltonian(random::hermitian(d, rng)), 1.0);
    const channels::DilationSpec spec(d, d, random::unitary(d * d, rng), quantum::gibbs_state(env));
    const auto rho = random::density(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(channels::heat_decomposition(spec, rho, env));
    }
}
BENCHMARK(BM_HeatDecomposition)->DenseRange(2, 6, 2);

void BM_SimulateSwapReset(benchmark::State& state) {
    const quantum::ThermoContext env(quantum::Hamiltonian::diagonal({0.0, 1.0}), 1.0);
    const auto mixed = quantum::DensityMatrix::maximally_mixed(2);
    const channels::ResetScenario sc({{1.0, mixed}}, quantum::gibbs_state(env), env,
                                     channels::ResetMode::Unconditional, {channels::swap_unitary(2)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(channels::simulate_reset(sc));
    }
}
BENCHMARK(BM_SimulateSwapReset);

} // namespace

BENCHMARK_MAIN();
