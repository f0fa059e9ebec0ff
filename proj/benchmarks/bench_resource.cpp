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

#include "revtherm/random.hpp"
#include "revtherm/resource.hpp"

namespace {

using namespace revtherm;

void BM_ThermomajFeasible(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    random::Engine rng(31);
    const auto p = random::distribution(n, rng);
    const auto q = random::distribution(n, rng);
    std::vector<double> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = 0.3 * static_cast<double>(i);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(resource::thermomaj_feasible(p, q, e, 1.0));
    }
}
BENCHMARK(BM_ThermomajFeasible)->RangeMultiplier(2)->Range(2, 64);

void BM_SecondLaws(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    random::Engine rng(32);
    std::vector<double> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = 0.3 * static_cast<double>(i);
    }
    const quantum::ThermoContext ctx(quantum::Hamiltonian::diagonal(e), 1.0);
    const auto a = quantum::DensityMatrix::diagonal(random::distribution(n, rng));
    const auto b = quantum::DensityMatrix::diagonal(random::distribution(n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(resource::second_laws_check(a, b, ctx));
    }
}
BENCHMARK(BM_SecondLaws)->RangeMultiplier(2)->Range(2, 16);

} // namespace

BENCHMARK_MAIN();
