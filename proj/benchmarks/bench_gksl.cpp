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

#include "revtherm/gksl.hpp"
#include "revtherm/random.hpp"

namespace {

using namespace revtherm;

gksl::Lindbladian random_lindbladian(std::size_t d) {
    random::Engine rng(11);
    return gksl::Lindbladian(quantum::Hamiltonian(random::hermitian(d, rng)),
                             {{random::ginibre(d, d, rng), 0.3}, {random::ginibre(d, d, rng), 0.7}});
}

void BM_BuildSuperoperator(benchmark::State& state) {
    const auto l = random_lindbladian(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gksl::build_superoperator(l));
    }
}
BENCHMARK(BM_BuildSuperoperator)->DenseRange(2, 8, 2);

void BM_Propagate(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto l = random_lindbladian(d);
    random::Engine rng(12);
    const auto rho = random::density(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gksl::propagate(l, rho, 1.5));
    }
}
BENCHMARK(BM_Propagate)->DenseRange(2, 8, 2);

void BM_PropagatorTrajectory(benchmark::State& state) {
    const auto l = random_lindbladian(4);
    const gksl::Propagator prop(l);
    random::Engine rng(13);
    const auto rho = random::density(4, rng);
    for (auto _ : state) {
        for (int k = 0; k < 20; ++k) {
            benchmark::DoNotOptimize(prop.raw(rho.matrix(), 0.1 * k));
        }
    }
}
BENCHMARK(BM_PropagatorTrajectory);

void BM_Decompose(benchmark::State& state) {
    const auto l = random_lindbladian(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gksl::decompose(l));
    }
}
BENCHMARK(BM_Decompose)->DenseRange(2, 6, 2);

void BM_CesaroProjector(benchmark::State& state) {
    linalg::ComplexMatrix z = linalg::ComplexMatrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const gksl::Lindbladian l(quantum::Hamiltonian::zero(2), {{z, 1.0}});
    const auto samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gksl::cesaro_projector(l, 1e3, samples));
    }
}
BENCHMARK(BM_CesaroProjector)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
