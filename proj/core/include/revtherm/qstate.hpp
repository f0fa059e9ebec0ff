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
#include <vector>

#include "revtherm/qlinalg.hpp"

namespace revtherm::quantum {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using linalg::RealVector;

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
public:
    /// Validates Hermiticity, trace and positivity. Throws ContractError.
    explicit DensityMatrix(const ComplexMatrix& m);

    static DensityMatrix from_pure(const ComplexVector& psi);
    static DensityMatrix maximally_mixed(std::size_t d);
    static DensityMatrix diagonal(const std::vector<double>& p);
    /// Hermitizes, clips negative eigenvalues and renormalizes. Throws
    /// ContractError if nothing positive is left.
    static DensityMatrix repaired(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    /// Ascending eigenvalues with values in [-1e-10, 0) clipped to zero.
    const RealVector& eigenvalues() const { return eigenvalues_; }
    const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
    /// Diagonal entries (populations) in the stored basis.
    std::vector<double> populations() const;

private:
    struct Trusted {};
    DensityMatrix(Trusted, const ComplexMatrix& m);

    ComplexMatrix matrix_;
    RealVector eigenvalues_;
    ComplexMatrix eigenvectors_;
};

class Hamiltonian {
public:
    /// Throws ContractError if `m` is not Hermitian within the gate.
    explicit Hamiltonian(const ComplexMatrix& m);
    static Hamiltonian diagonal(const std::vector<double>& energies);
    static Hamiltonian zero(std::size_t d);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    /// Ascending spectrum.
    const RealVector& energies() const { return energies_; }
    const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

private:
    ComplexMatrix matrix_;
    RealVector energies_;
    ComplexMatrix eigenvectors_;
};

/// Hamiltonian plus inverse temperature (k_B = 1). beta = 0 is infinite temperature.
class ThermoContext {
public:
    ThermoContext(Hamiltonian h, double beta);

    const Hamiltonian& hamiltonian() const { return hamiltonian_; }
    double beta() const { return beta_; }
    /// 1/beta; throws ContractError when beta == 0.
    double temperature() const;
    std::size_t dim() const { return hamiltonian_.dim(); }

private:
    Hamiltonian hamiltonian_;
    double beta_;
};

/// Gibbs state in the Hamiltonian eigenbasis with exact log-populations.
struct GibbsSpectrum {
    ComplexMatrix vectors;
    RealVector log_populations;
    double log_z = 0.0;
};

GibbsSpectrum gibbs_spectrum(const ThermoContext& ctx);
DensityMatrix gibbs_state(const ThermoContext& ctx);
double log_partition_function(const ThermoContext& ctx);

/// U rho U^dag. Throws ContractError for non-unitary u, ShapeError on mismatch.
DensityMatrix evolve_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t d_a, std::size_t d_b,
                            linalg::Subsystem keep);

/// Throws ContractError unless p >= 0 and sums to 1 within 1e-9.
void validate_distribution(const std::vector<double>& p, const char* where);

double shannon_entropy(const std::vector<double>& p);
double von_neumann_entropy(const DensityMatrix& rho);
/// Tr[rho (ln rho - ln sigma)]; +infinity when supp rho is not inside supp sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);
/// S(rho || tau) for the Gibbs state of ctx, evaluated from exact log-populations.
double relative_entropy_to_gibbs(const DensityMatrix& rho, const ThermoContext& ctx);

/// alpha-relative Renyi entropy. alpha == 1 is the relative entropy;
/// alpha in {0, -1} throws ContractError.
double alpha_rre(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);
double alpha_rre_to_gibbs(const DensityMatrix& rho, const ThermoContext& ctx, double alpha);

/// Tr[H rho] - T S(rho). Requires beta > 0.
double helmholtz_free_energy(const DensityMatrix& rho, const ThermoContext& ctx);
/// -T ln Z + T S_alpha(rho || tau). Requires beta > 0.
double alpha_free_energy(const DensityMatrix& rho, const ThermoContext& ctx, double alpha);

/// I(A:B) = S(rho_AB || rho_A (x) rho_B).
double quantum_mutual_information(const DensityMatrix& rho_ab, std::size_t d_a, std::size_t d_b);

double expectation(const DensityMatrix& rho, const ComplexMatrix& op);
/// (1/2) ||rho - sigma||_1.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

} // namespace revtherm::quantum
