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

#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "revtherm/qstate.hpp"

namespace revtherm::random {

using Engine = std::mt19937_64;

/// Ginibre matrix with i.i.d. standard complex normal entries.
linalg::ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Engine& rng);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
linalg::ComplexMatrix unitary(std::size_t d, Engine& rng);
/// Hermitian matrix (G + G^dag) / 2.
linalg::ComplexMatrix hermitian(std::size_t d, Engine& rng);
/// Full-rank state G G^dag / Tr(G G^dag) when rank == d, otherwise rank-limited.
quantum::DensityMatrix density(std::size_t d, Engine& rng, std::size_t rank = 0);
/// Point on the probability simplex.
std::vector<double> distribution(std::size_t n, Engine& rng);

} // namespace revtherm::random
