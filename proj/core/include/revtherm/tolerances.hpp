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

// Numerical gates shared across modules. Reports echo these values.

namespace revtherm::tol {

/// Relative Hermiticity gate: ||H - H^dag||_HS <= kHermitian * max(1, ||H||_HS).
inline constexpr double kHermitian = 1e-10;
/// ||U^dag U - I||_HS gate for unitaries.
inline constexpr double kUnitary = 1e-10;
/// Density matrices: |Tr rho - 1| and the most negative admissible eigenvalue.
inline constexpr double kTrace = 1e-10;
inline constexpr double kEigenClip = 1e-10;
/// Eigenvalues at or below this are treated as outside the support.
inline constexpr double kSupport = 1e-12;
/// Probability vectors must sum to one within this.
inline constexpr double kDistribution = 1e-9;
/// Rows of a stochastic operation must sum to one within this.
inline constexpr double kStochasticRow = 1e-12;
/// "Probability 1" / positive-probability gate on input distributions.
inline constexpr double kProbability = 1e-12;
/// Eigenvector-matrix condition number above which a matrix is defective.
inline constexpr double kDiagonalizableCondition = 1e8;
/// Relative gate for block-diagonality and DFS commutation checks.
inline constexpr double kBlockStructure = 1e-10;
/// Kraus completeness.
inline constexpr double kKraus = 1e-9;
/// Slack for feasibility and bound comparisons.
inline constexpr double kFeasibility = 1e-9;

} // namespace revtherm::tol
