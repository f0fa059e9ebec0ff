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
#include <optional>
#include <vector>

#include "revtherm/compmodel.hpp"
#include "revtherm/qstate.hpp"

namespace revtherm::gksl {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using quantum::DensityMatrix;
using quantum::Hamiltonian;

struct Jump {
    ComplexMatrix op;
    double rate = 0.0;
};

/// Hamiltonian plus jump operators with non-negative rates.
class Lindbladian {
public:
    /// Throws ContractError for negative rates, ShapeError for mismatched jumps.
    Lindbladian(Hamiltonian h, std::vector<Jump> jumps);

    const Hamiltonian& hamiltonian() const { return h_; }
    const std::vector<Jump>& jumps() const { return jumps_; }
    std::size_t dim() const { return h_.dim(); }

private:
    Hamiltonian h_;
    std::vector<Jump> jumps_;
};

/// d^2 x d^2 matrix acting on column-stacked operators.
class SuperoperatorMatrix {
public:
    SuperoperatorMatrix() = default;
    /// Throws ShapeError unless the matrix is square with perfect-square side.
    explicit SuperoperatorMatrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    /// Hilbert-space dimension d.
    std::size_t dim() const { return d_; }
    /// devec(S |A>>).
    ComplexMatrix apply(const ComplexMatrix& a) const;

private:
    ComplexMatrix m_;
    std::size_t d_ = 0;
};

/// -i(I (x) H - H^T (x) I) + sum k (F* (x) F - (I (x) F^dag F + (F^dag F)^T (x) I) / 2).
SuperoperatorMatrix build_superoperator(const Lindbladian& l);
/// Heisenberg-picture generator; the Hilbert-Schmidt adjoint of build_superoperator.
SuperoperatorMatrix build_adjoint_superoperator(const Lindbladian& l);

/// ||<<I| L||, the trace-preservation residual of a generator.
double trace_functional_residual(const SuperoperatorMatrix& l);

/// devec(exp(tL) |rho0>>) without any health checks.
ComplexMatrix propagate_raw(const SuperoperatorMatrix& l, const ComplexMatrix& rho0, double t);

/// Checked propagation. Throws ContractError for t < 0 and NumericHealthError
/// if the trace drifts by more than 1e-9 or an eigenvalue falls below -1e-8.
DensityMatrix propagate(const Lindbladian& l, const DensityMatrix& rho0, double t);

/// Precomputes the generator so trajectories do not rebuild it.
class Propagator {
public:
    explicit Propagator(const Lindbladian& l);
    const SuperoperatorMatrix& generator() const { return l_; }
    ComplexMatrix raw(const ComplexMatrix& rho0, double t) const;
    DensityMatrix operator()(const DensityMatrix& rho0, double t) const;

private:
    SuperoperatorMatrix l_;
    linalg::GeneralEigen eig_;
};

enum class ProjectorMethod { Spectral, Cesaro };

struct AsymptoticDecomposition {
    std::size_t dim = 0;
    double tolerance = 0.0;
    ProjectorMethod method = ProjectorMethod::Spectral;
    ComplexVector eigenvalues;
    ComplexMatrix right;                 ///< columns |p_a>> (spectral method only)
    ComplexMatrix left;                  ///< rows <<q_a|   (spectral method only)
    std::vector<std::size_t> asymptotic; ///< indices with |Re lambda| <= tolerance
    std::vector<double> frequencies;     ///< distinct Im lambda over the asymptotic set
    SuperoperatorMatrix p_inf;
    ComplexMatrix p_a;
    ComplexMatrix q;
};

/// Default asymptotic gate 1e-8 * max(1, spectral radius).
AsymptoticDecomposition decompose(const Lindbladian& l, std::optional<double> tol = std::nullopt);

enum class Window { Hann, Uniform };

/// Windowed time average sum_Lambda (1/T) int_0^T w(t/T) exp(t(L - i Lambda)) dt,
/// trapezoid rule with `samples` intervals. Frequencies default to those of
/// decompose(l), or {0} if that fails.
SuperoperatorMatrix cesaro_projector(const Lindbladian& l, double horizon, std::size_t samples,
                                     Window window = Window::Hann,
                                     std::optional<std::vector<double>> frequencies = std::nullopt);

/// exp(-i H s) devec(P_inf |rho>>) exp(i H s). Throws ContractError unless
/// H = P_A H P_A within the Hermiticity gate.
DensityMatrix asymptotic_evolution(const AsymptoticDecomposition& dec, const DensityMatrix& rho_in,
                                   const Hamiltonian& h_inf, double s);

struct FourCorners {
    ComplexMatrix top_left;     ///< P_A A P_A
    ComplexMatrix top_right;    ///< P_A A Q
    ComplexMatrix bottom_left;  ///< Q A P_A
    ComplexMatrix bottom_right; ///< Q A Q
};

FourCorners four_corners(const ComplexMatrix& a, const AsymptoticDecomposition& dec);

/// Every cross-block entry has modulus <= 1e-10 * max(1, ||op||_HS).
bool dfs_commutes(const ComplexMatrix& op, const comp::BasisPartition& partition);

struct CompSplit {
    ComplexMatrix noncomputational; ///< block-diagonal mask of op
    ComplexMatrix computational;    ///< op - noncomputational
};

CompSplit split_comp_noncomp(const ComplexMatrix& op, const comp::BasisPartition& partition);

/// Hilbert-Schmidt norm of the cross-block part.
double cross_block_mass(const ComplexMatrix& op, const comp::BasisPartition& partition);

struct DephasingResult {
    double initial_coherence = 0.0;
    double residual_coherence = 0.0;
    bool classical = false; ///< residual <= 1e-6 * initial
};

DephasingResult dephasing_check(const Lindbladian& l, const comp::BasisPartition& partition,
                                const DensityMatrix& rho, double t_resolve);

} // namespace revtherm::gksl
