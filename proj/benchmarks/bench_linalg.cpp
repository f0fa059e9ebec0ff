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

#include "revtherm/qlinalg.hpp"
#include "revtherm/qstate.hpp"
#include "revtherm/random.hpp"

namespace {

using namespace revtherm;

void BM_EigHermitian(benchmark::State& state) {
    random::Engine rng(1);
    const auto d = static_cast<std::size_t>(state.range(0));
    const linalg::ComplexMatrix h = random::hermitian(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::eig_hermitian(h));
    }
}
BENCHMARK(BM_EigHermitian)->RangeMultiplier(2)->Range(2, 64);

void BM_MatrixExp(benchmark::State& state) {
    random::Engine rng(2);
    const auto d = static_cast<std::size_t>(state.range(0));
    const linalg::ComplexMatrix m = random::ginibre(d, d, rng);
    const auto method = static_cast<linalg::ExpMethod>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::matrix_exp(m, method));
    }
}
BENCHMARK(BM_MatrixExp)
    ->ArgsProduct({{4, 16, 64}, {static_cast<int>(linalg::ExpMethod::Spectral), static_cast<int>(linalg::ExpMethod::Series)}});

void BM_PartialTrace(benchmark::State& state) {
    random::Engine rng(3);
    const auto d = static_cast<std::size_t>(state.range(0));
    const linalg::ComplexMatrix rho = random::density(d * d, rng).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::partial_trace(rho, d, d, linalg::Subsystem::A));
    }
}
BENCHMARK(BM_PartialTrace)->RangeMultiplier(2)->Range(2, 16);

void BM_VonNeumannEntropy(benchmark::State& state) {
    random::Engine rng(4);
    const auto d = static_cast<std::size_t>(state.range(0));
    const linalg::ComplexMatrix m = random::density(d, rng).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantum::von_neumann_entropy(quantum::DensityMatrix(m)));
    }
}
BENCHMARK(BM_VonNeumannEntropy)->RangeMultiplier(2)->Range(2, 64);

} // namespace

BENCHMARK_MAIN();
