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

#include "revtherm/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "revtherm/errors.hpp"
#include "revtherm/tolerances.hpp"

namespace revtherm::quantum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Eigenbasis of a positive operator with log-eigenvalues; -inf marks the kernel.
struct LogSpectrum {
    ComplexMatrix vectors;
    RealVector logs;
};

LogSpectrum log_spectrum(const DensityMatrix& sigma) {
    LogSpectrum out{sigma.eigenvectors(), RealVector(sigma.eigenvalues().size())};
    for (Eigen::Index j = 0; j < out.logs.size(); ++j) {
        const double q = sigma.eigenvalues()(j);
        out.logs(j) = q > tol::kSupport ? std::log(q) : -kInf;
    }
    return out;
}

LogSpectrum log_spectrum(const ThermoContext& ctx) {
    GibbsSpectrum g = gibbs_spectrum(ctx);
    return {std::move(g.vectors), std::move(g.log_populations)};
}

void require_same_dim(const DensityMatrix& a, std::size_t d, const char* where) {
    if (a.dim() != d) {
        throw_shape(where, "dimension " + std::to_string(a.dim()) + " does not match " +
                               std::to_string(d));
    }
}

// <w_j| rho |w_j> for every column of W.
RealVector diagonal_in_basis(const DensityMatrix& rho, const ComplexMatrix& w) {
    return (w.adjoint() * rho.matrix() * w).diagonal().real();
}

double kernel_weight(const DensityMatrix& rho, const LogSpectrum& s) {
    const RealVector diag = diagonal_in_basis(rho, s.vectors);
    double w = 0.0;
    for (Eigen::Index j = 0; j < s.logs.size(); ++j) {
        if (std::isinf(s.logs(j))) {
            w += diag(j);
        }
    }
    return w;
}

double log_sum_exp(const std::vector<double>& xs) {
    if (xs.empty()) {
        return -kInf;
    }
    const double m = *std::max_element(xs.begin(), xs.end());
    if (std::isinf(m)) {
        return m;
    }
    double s = 0.0;
    for (double x : xs) {
        s += std::exp(x - m);
    }
    return m + std::log(s);
}

double relative_entropy_impl(const DensityMatrix& rho, const LogSpectrum& s) {
    if (kernel_weight(rho, s) > tol::kSupport) {
        return kInf;
    }
    const RealVector diag = diagonal_in_basis(rho, s.vectors);
    double cross = 0.0;
    for (Eigen::Index j = 0; j < s.logs.size(); ++j) {
        if (!std::isinf(s.logs(j))) {
            cross += diag(j) * s.logs(j);
        }
    }
    return std::max(0.0, -von_neumann_entropy(rho) - cross);
}

double alpha_rre_impl(const DensityMatrix& rho, const LogSpectrum& s, double alpha) {
    if (!std::isfinite(alpha) || alpha == 0.0 || alpha == -1.0) {
        throw_contract("alpha_rre", "alpha must be finite and not in {0, -1}");
    }
    if (alpha == 1.0) {
        return relative_entropy_impl(rho, s);
    }
    const double sgn = alpha > 0.0 ? 1.0 : -1.0;
    const double prefactor = sgn / (alpha - 1.0);
    const double log_tr_rho = std::log(rho.matrix().trace().real());

    if (std::abs(alpha) < 1.0) {
        const RealVector& p = rho.eigenvalues();
        const ComplexMatrix overlap = rho.eigenvectors().adjoint() * s.vectors;
        std::vector<double> terms;
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            if (p(i) <= tol::kSupport) {
                continue;
            }
            for (Eigen::Index j = 0; j < s.logs.size(); ++j) {
                const double ov = std::norm(overlap(i, j));
                if (std::isinf(s.logs(j)) || ov <= 0.0) {
                    continue;
                }
                terms.push_back(alpha * std::log(p(i)) + (1.0 - alpha) * s.logs(j) + std::log(ov));
            }
        }
        return prefactor * (log_sum_exp(terms) - log_tr_rho);
    }

    if (alpha > 1.0 && kernel_weight(rho, s) > tol::kSupport) {
        return kInf;
    }
    const double gamma = (1.0 - alpha) / (2.0 * alpha);
    ComplexVector scale(s.logs.size());
    for (Eigen::Index j = 0; j < s.logs.size(); ++j) {
        scale(j) = std::isinf(s.logs(j)) ? Complex(0.0) : Complex(std::exp(gamma * s.logs(j)));
    }
    const ComplexMatrix a = s.vectors * scale.asDiagonal() * s.vectors.adjoint();
    const ComplexMatrix x = linalg::hermitian_part(a * rho.matrix() * a);
    const RealVector xv = linalg::eig_hermitian(x).values;
    const double xmax = xv.maxCoeff();
    std::vector<double> terms;
    for (Eigen::Index k = 0; k < xv.size(); ++k) {
        if (xv(k) > tol::kSupport * std::max(1.0, xmax)) {
            terms.push_back(alpha * std::log(xv(k)));
        }
    }
    return prefactor * (log_sum_exp(terms) - log_tr_rho);
}

} // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
    if (!linalg::is_square(m) || m.rows() == 0) {
        throw_shape("DensityMatrix", "matrix must be square and non-empty");
    }
    if (!linalg::all_finite(m)) {
        throw_contract("DensityMatrix", "entries must be finite");
    }
    if (!linalg::is_hermitian(m)) {
        throw_contract("DensityMatrix", "matrix is not Hermitian within tolerance");
    }
    matrix_ = linalg::hermitian_part(m);
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol::kTrace) {
        throw_contract("DensityMatrix", "trace " + std::to_string(tr) + " differs from 1");
    }
    const linalg::HermitianEigen eig = linalg::eig_hermitian(matrix_);
    if (eig.values(0) < -tol::kEigenClip) {
        throw_contract("DensityMatrix",
                       "negative eigenvalue " + std::to_string(eig.values(0)) + " below tolerance");
    }
    eigenvalues_ = eig.values.cwiseMax(0.0);
    eigenvectors_ = eig.vectors;
}

DensityMatrix::DensityMatrix(Trusted, const ComplexMatrix& m) : matrix_(m) {
    const linalg::HermitianEigen eig = linalg::eig_hermitian(matrix_);
    eigenvalues_ = eig.values.cwiseMax(0.0);
    eigenvectors_ = eig.vectors;
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi) {
    const double n = psi.norm();
    if (psi.size() == 0 || !(n > 0.0) || !std::isfinite(n)) {
        throw_contract("DensityMatrix::from_pure", "state vector must be finite and non-zero");
    }
    const ComplexVector v = psi / n;
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    if (d == 0) {
        throw_shape("DensityMatrix::maximally_mixed", "dimension must be positive");
    }
    return DensityMatrix(linalg::identity(d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& p) {
    validate_distribution(p, "DensityMatrix::diagonal");
    RealVector v = Eigen::Map<const RealVector>(p.data(), static_cast<Eigen::Index>(p.size()));
    return DensityMatrix(ComplexMatrix(v.cast<Complex>().asDiagonal()));
}

DensityMatrix DensityMatrix::repaired(const ComplexMatrix& m) {
    if (!linalg::is_square(m) || m.rows() == 0 || !linalg::all_finite(m)) {
        throw_contract("DensityMatrix::repaired", "matrix must be square, finite and non-empty");
    }
    const linalg::HermitianEigen eig = linalg::eig_hermitian(linalg::hermitian_part(m));
    const RealVector clipped = eig.values.cwiseMax(0.0);
    const double total = clipped.sum();
    if (!(total > 0.0)) {
        throw_contract("DensityMatrix::repaired", "no positive spectrum left after clipping");
    }
    const ComplexMatrix out =
        eig.vectors * (clipped / total).cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    return DensityMatrix(Trusted{}, linalg::hermitian_part(out));
}

std::vector<double> DensityMatrix::populations() const {
    std::vector<double> p(dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        p[i] = matrix_(k, k).real();
    }
    return p;
}

Hamiltonian::Hamiltonian(const ComplexMatrix& m) {
    if (!linalg::is_square(m) || m.rows() == 0) {
        throw_shape("Hamiltonian", "matrix must be square and non-empty");
    }
    if (!linalg::is_hermitian(m)) {
        throw_contract("Hamiltonian", "matrix is not Hermitian within tolerance");
    }
    matrix_ = linalg::hermitian_part(m);
    const linalg::HermitianEigen eig = linalg::eig_hermitian(matrix_);
    energies_ = eig.values;
    eigenvectors_ = eig.vectors;
}

Hamiltonian Hamiltonian::diagonal(const std::vector<double>& energies) {
    RealVector v =
        Eigen::Map<const RealVector>(energies.data(), static_cast<Eigen::Index>(energies.size()));
    return Hamiltonian(ComplexMatrix(v.cast<Complex>().asDiagonal()));
}

Hamiltonian Hamiltonian::zero(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return Hamiltonian(ComplexMatrix::Zero(n, n));
}

ThermoContext::ThermoContext(Hamiltonian h, double beta) : hamiltonian_(std::move(h)), beta_(beta) {
    if (!std::isfinite(beta) || beta < 0.0) {
        throw_contract("ThermoContext", "beta must be finite and non-negative");
    }
}

double ThermoContext::temperature() const {
    if (beta_ == 0.0) {
        throw_contract("ThermoContext", "temperature is undefined at beta = 0");
    }
    return 1.0 / beta_;
}

GibbsSpectrum gibbs_spectrum(const ThermoContext& ctx) {
    const RealVector& e = ctx.hamiltonian().energies();
    const double e0 = e.minCoeff();
    RealVector shifted = -ctx.beta() * (e.array() - e0);
    const double log_z_shifted = std::log(shifted.array().exp().sum());
    GibbsSpectrum out;
    out.vectors = ctx.hamiltonian().eigenvectors();
    out.log_populations = shifted.array() - log_z_shifted;
    out.log_z = -ctx.beta() * e0 + log_z_shifted;
    return out;
}

DensityMatrix gibbs_state(const ThermoContext& ctx) {
    const GibbsSpectrum g = gibbs_spectrum(ctx);
    const RealVector p = g.log_populations.array().exp();
    const ComplexMatrix tau = g.vectors * p.cast<Complex>().asDiagonal() * g.vectors.adjoint();
    return DensityMatrix::repaired(tau);
}

double log_partition_function(const ThermoContext& ctx) {
    return gibbs_spectrum(ctx).log_z;
}

DensityMatrix evolve_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
    require_same_dim(rho, static_cast<std::size_t>(u.rows()), "evolve_unitary");
    if (!linalg::is_unitary(u)) {
        throw_contract("evolve_unitary", "operator is not unitary within tolerance");
    }
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(linalg::tensor(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t d_a, std::size_t d_b,
                            linalg::Subsystem keep) {
    return DensityMatrix(linalg::partial_trace(rho.matrix(), d_a, d_b, keep));
}

void validate_distribution(const std::vector<double>& p, const char* where) {
    if (p.empty()) {
        throw_contract(where, "distribution is empty");
    }
    double total = 0.0;
    for (double x : p) {
        if (!std::isfinite(x) || x < 0.0) {
            throw_contract(where, "probabilities must be finite and non-negative");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > tol::kDistribution) {
        throw_contract(where, "probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

double shannon_entropy(const std::vector<double>& p) {
    validate_distribution(p, "shannon_entropy");
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            h -= x * std::log(x);
        }
    }
    return std::max(0.0, h);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < rho.eigenvalues().size(); ++i) {
        const double x = rho.eigenvalues()(i);
        if (x > 0.0) {
            h -= x * std::log(x);
        }
    }
    return std::max(0.0, h);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma.dim(), "relative_entropy");
    return relative_entropy_impl(rho, log_spectrum(sigma));
}

double relative_entropy_to_gibbs(const DensityMatrix& rho, const ThermoContext& ctx) {
    require_same_dim(rho, ctx.dim(), "relative_entropy_to_gibbs");
    return relative_entropy_impl(rho, log_spectrum(ctx));
}

double alpha_rre(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
    require_same_dim(rho, sigma.dim(), "alpha_rre");
    return alpha_rre_impl(rho, log_spectrum(sigma), alpha);
}

double alpha_rre_to_gibbs(const DensityMatrix& rho, const ThermoContext& ctx, double alpha) {
    require_same_dim(rho, ctx.dim(), "alpha_rre_to_gibbs");
    return alpha_rre_impl(rho, log_spectrum(ctx), alpha);
}

double helmholtz_free_energy(const DensityMatrix& rho, const ThermoContext& ctx) {
    require_same_dim(rho, ctx.dim(), "helmholtz_free_energy");
    const double t = ctx.temperature();
    return expectation(rho, ctx.hamiltonian().matrix()) - t * von_neumann_entropy(rho);
}

double alpha_free_energy(const DensityMatrix& rho, const ThermoContext& ctx, double alpha) {
    require_same_dim(rho, ctx.dim(), "alpha_free_energy");
    const double t = ctx.temperature();
    return -t * log_partition_function(ctx) + t * alpha_rre_to_gibbs(rho, ctx, alpha);
}

double quantum_mutual_information(const DensityMatrix& rho_ab, std::size_t d_a, std::size_t d_b) {
    const DensityMatrix a = partial_trace(rho_ab, d_a, d_b, linalg::Subsystem::A);
    const DensityMatrix b = partial_trace(rho_ab, d_a, d_b, linalg::Subsystem::B);
    // Equal to S(rho_AB || rho_A (x) rho_B); the entropy form avoids support thresholds.
    const double i = von_neumann_entropy(a) + von_neumann_entropy(b) - von_neumann_entropy(rho_ab);
    return std::max(0.0, i);
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
    if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != rho.dim()) {
        throw_shape("expectation", "operator does not match state dimension");
    }
    return (op * rho.matrix()).trace().real();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma.dim(), "trace_distance");
    return 0.5 * linalg::trace_norm_hermitian(rho.matrix() - sigma.matrix());
}

} // namespace revtherm::quantum
