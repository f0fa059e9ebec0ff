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

#include "revtherm/gksl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/SVD>

#include "revtherm/errors.hpp"
#include "revtherm/tolerances.hpp"

namespace revtherm::gksl {

namespace {

constexpr double kTraceHealth = 1e-9;
constexpr double kPositivityHealth = 1e-8;
constexpr double kSupportProjector = 1e-10;
constexpr double kFrequencyCluster = 1e-6;
constexpr double kRankGate = 1e-7;
constexpr double kFallbackHorizon = 1e3;
constexpr std::size_t kFallbackMinSamples = 10000;
constexpr std::size_t kFallbackMaxSamples = 200000;

double spectral_radius(const ComplexVector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

std::vector<double> cluster_frequencies(const ComplexVector& values,
                                        const std::vector<std::size_t>& idx, double scale) {
    std::vector<double> im;
    for (std::size_t a : idx) {
        im.push_back(values(static_cast<Eigen::Index>(a)).imag());
    }
    std::sort(im.begin(), im.end());
    std::vector<double> out;
    const double gate = kFrequencyCluster * std::max(1.0, scale);
    std::size_t k = 0;
    while (k < im.size()) {
        std::size_t j = k + 1;
        double sum = im[k];
        while (j < im.size() && im[j] - im[j - 1] <= gate) {
            sum += im[j];
            ++j;
        }
        out.push_back(sum / static_cast<double>(j - k));
        k = j;
    }
    for (double& f : out) {
        if (std::abs(f) <= gate) {
            f = 0.0;
        }
    }
    return out;
}

ComplexMatrix support_projector(const ComplexMatrix& m) {
    const linalg::HermitianEigen eig = linalg::eig_hermitian(linalg::hermitian_part(m));
    const auto d = eig.values.size();
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        if (eig.values(k) > kSupportProjector) {
            p += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
        }
    }
    return p;
}

// Geometric multiplicity equals algebraic multiplicity on every asymptotic cluster.
void assert_diagonal_asymptotic_jordan(const ComplexMatrix& l, const ComplexVector& values,
                                       const std::vector<std::size_t>& asymptotic, double scale) {
    const Eigen::Index n = l.rows();
    const double gate = kFrequencyCluster * std::max(1.0, scale);
    std::vector<bool> done(asymptotic.size(), false);
    for (std::size_t i = 0; i < asymptotic.size(); ++i) {
        if (done[i]) {
            continue;
        }
        const Complex center = values(static_cast<Eigen::Index>(asymptotic[i]));
        std::size_t algebraic = 0;
        for (std::size_t j = i; j < asymptotic.size(); ++j) {
            if (std::abs(values(static_cast<Eigen::Index>(asymptotic[j])) - center) <= gate) {
                done[j] = true;
                ++algebraic;
            }
        }
        const ComplexMatrix shifted = l - center * ComplexMatrix::Identity(n, n);
        Eigen::JacobiSVD<ComplexMatrix> svd(shifted);
        const auto& sv = svd.singularValues();
        const double thresh = kRankGate * std::max(1.0, sv(0));
        std::size_t null_dim = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k) {
            if (sv(k) <= thresh) {
                ++null_dim;
            }
        }
        if (null_dim != algebraic) {
            throw NumericHealthError("decompose: asymptotic eigenvalue block has a non-trivial Jordan chain");
        }
    }
}

void finish_projectors(AsymptoticDecomposition& dec) {
    const auto d = static_cast<Eigen::Index>(dec.dim);
    const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    dec.p_a = support_projector(dec.p_inf.apply(mixed));
    dec.q = ComplexMatrix::Identity(d, d) - dec.p_a;
}

} // namespace

Lindbladian::Lindbladian(Hamiltonian h, std::vector<Jump> jumps) : h_(std::move(h)), jumps_(std::move(jumps)) {
    const auto d = static_cast<Eigen::Index>(h_.dim());
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
        const auto& j = jumps_[k];
        if (j.op.rows() != d || j.op.cols() != d) {
            throw_shape("Lindbladian", "jump " + std::to_string(k) + " does not match the Hamiltonian");
        }
        if (!std::isfinite(j.rate) || j.rate < 0.0) {
            throw_contract("Lindbladian", "jump " + std::to_string(k) + " has a negative rate");
        }
        if (!linalg::all_finite(j.op)) {
            throw_contract("Lindbladian", "jump " + std::to_string(k) + " has non-finite entries");
        }
    }
}

SuperoperatorMatrix::SuperoperatorMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw_shape("SuperoperatorMatrix", "matrix must be square");
    }
    const auto n = static_cast<double>(m_.rows());
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(n)));
    if (d * d != static_cast<std::size_t>(m_.rows())) {
        throw_shape("SuperoperatorMatrix", "side length is not a perfect square");
    }
    d_ = d;
}

ComplexMatrix SuperoperatorMatrix::apply(const ComplexMatrix& a) const {
    if (static_cast<std::size_t>(a.rows()) != d_ || static_cast<std::size_t>(a.cols()) != d_) {
        throw_shape("SuperoperatorMatrix::apply", "operator does not match dimension");
    }
    return linalg::devectorize(ComplexVector(m_ * linalg::vectorize(a).entries()));
}

SuperoperatorMatrix build_superoperator(const Lindbladian& l) {
    const ComplexMatrix id = linalg::identity(l.dim());
    const ComplexMatrix& h = l.hamiltonian().matrix();
    const Complex i(0.0, 1.0);
    ComplexMatrix m = -i * (linalg::vec_product_map(h, id) - linalg::vec_product_map(id, h));
    for (const auto& j : l.jumps()) {
        const ComplexMatrix fdf = j.op.adjoint() * j.op;
        m += j.rate * (linalg::vec_product_map(j.op, j.op.adjoint()) -
                       0.5 * linalg::vec_product_map(fdf, id) - 0.5 * linalg::vec_product_map(id, fdf));
    }
    return SuperoperatorMatrix(std::move(m));
}

SuperoperatorMatrix build_adjoint_superoperator(const Lindbladian& l) {
    const ComplexMatrix id = linalg::identity(l.dim());
    const ComplexMatrix& h = l.hamiltonian().matrix();
    const Complex i(0.0, 1.0);
    ComplexMatrix m = i * (linalg::vec_product_map(h, id) - linalg::vec_product_map(id, h));
    for (const auto& j : l.jumps()) {
        const ComplexMatrix fdf = j.op.adjoint() * j.op;
        m += j.rate * (linalg::vec_product_map(j.op.adjoint(), j.op) -
                       0.5 * linalg::vec_product_map(fdf, id) - 0.5 * linalg::vec_product_map(id, fdf));
    }
    return SuperoperatorMatrix(std::move(m));
}

double trace_functional_residual(const SuperoperatorMatrix& l) {
    const ComplexVector id = linalg::vectorize(linalg::identity(l.dim())).entries();
    return (id.adjoint() * l.matrix()).norm();
}

ComplexMatrix propagate_raw(const SuperoperatorMatrix& l, const ComplexMatrix& rho0, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw_contract("propagate", "time must be finite and non-negative");
    }
    if (t == 0.0) {
        return rho0;
    }
    const ComplexMatrix e = linalg::matrix_exp(t * l.matrix());
    return SuperoperatorMatrix(e).apply(rho0);
}

namespace {

DensityMatrix checked_state(const ComplexMatrix& raw) {
    const double tr = raw.trace().real();
    if (!std::isfinite(tr) || std::abs(tr - 1.0) > kTraceHealth) {
        throw NumericHealthError("propagate: trace drifted to " + std::to_string(tr));
    }
    const ComplexMatrix herm = linalg::hermitian_part(raw);
    const double min_eig = linalg::eig_hermitian(herm).values(0);
    if (min_eig < -kPositivityHealth) {
        throw NumericHealthError("propagate: eigenvalue " + std::to_string(min_eig) + " below tolerance");
    }
    return DensityMatrix::repaired(herm);
}

} // namespace

DensityMatrix propagate(const Lindbladian& l, const DensityMatrix& rho0, double t) {
    if (rho0.dim() != l.dim()) {
        throw_shape("propagate", "state does not match the Lindbladian");
    }
    if (t == 0.0) {
        return rho0;
    }
    return checked_state(propagate_raw(build_superoperator(l), rho0.matrix(), t));
}

Propagator::Propagator(const Lindbladian& l) : l_(build_superoperator(l)), eig_(linalg::eig_general(l_.matrix())) {}

ComplexMatrix Propagator::raw(const ComplexMatrix& rho0, double t) const {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw_contract("propagate", "time must be finite and non-negative");
    }
    if (t == 0.0) {
        return rho0;
    }
    const ComplexVector v = linalg::vectorize(rho0).entries();
    if (eig_.status == linalg::EigenStatus::Ok) {
        const ComplexVector e = (t * eig_.values).array().exp();
        return linalg::devectorize(ComplexVector(eig_.right * (e.asDiagonal() * (eig_.left * v))));
    }
    return SuperoperatorMatrix(linalg::matrix_exp(t * l_.matrix(), linalg::ExpMethod::Series)).apply(rho0);
}

DensityMatrix Propagator::operator()(const DensityMatrix& rho0, double t) const {
    if (rho0.dim() != l_.dim()) {
        throw_shape("propagate", "state does not match the Lindbladian");
    }
    if (t == 0.0) {
        return rho0;
    }
    return checked_state(raw(rho0.matrix(), t));
}

AsymptoticDecomposition decompose(const Lindbladian& l, std::optional<double> tol) {
    const SuperoperatorMatrix sup = build_superoperator(l);
    const linalg::GeneralEigen eig = linalg::eig_general(sup.matrix());
    const double radius = spectral_radius(eig.values);

    AsymptoticDecomposition dec;
    dec.dim = l.dim();
    dec.tolerance = tol.value_or(1e-8 * std::max(1.0, radius));
    dec.eigenvalues = eig.values;
    for (Eigen::Index a = 0; a < eig.values.size(); ++a) {
        const double re = eig.values(a).real();
        if (re > dec.tolerance) {
            throw NumericHealthError("decompose: eigenvalue with positive real part " + std::to_string(re));
        }
        if (std::abs(re) <= dec.tolerance) {
            dec.asymptotic.push_back(static_cast<std::size_t>(a));
        }
    }
    dec.frequencies = cluster_frequencies(eig.values, dec.asymptotic, radius);

    const auto n = sup.matrix().rows();
    if (eig.status == linalg::EigenStatus::Ok) {
        dec.method = ProjectorMethod::Spectral;
        dec.right = eig.right;
        dec.left = eig.left;
        ComplexMatrix p = ComplexMatrix::Zero(n, n);
        for (std::size_t a : dec.asymptotic) {
            const auto k = static_cast<Eigen::Index>(a);
            p += eig.right.col(k) * eig.left.row(k);
        }
        dec.p_inf = SuperoperatorMatrix(std::move(p));
    } else {
        assert_diagonal_asymptotic_jordan(sup.matrix(), eig.values, dec.asymptotic, radius);
        double gap = 0.0;
        for (Eigen::Index a = 0; a < eig.values.size(); ++a) {
            const double re = std::abs(eig.values(a).real());
            if (re > dec.tolerance && (gap == 0.0 || re < gap)) {
                gap = re;
            }
        }
        const double horizon = kFallbackHorizon / (gap > 0.0 ? gap : 1.0);
        const double wanted = std::ceil(10.0 * horizon * std::max(1.0, radius));
        const auto samples = static_cast<std::size_t>(
            std::clamp(wanted, static_cast<double>(kFallbackMinSamples), static_cast<double>(kFallbackMaxSamples)));
        dec.method = ProjectorMethod::Cesaro;
        dec.p_inf = cesaro_projector(l, horizon, samples, Window::Hann, dec.frequencies);
    }
    finish_projectors(dec);
    return dec;
}

SuperoperatorMatrix cesaro_projector(const Lindbladian& l, double horizon, std::size_t samples,
                                     Window window, std::optional<std::vector<double>> frequencies) {
    if (!(horizon > 0.0) || !std::isfinite(horizon) || samples == 0) {
        throw_contract("cesaro_projector", "horizon must be positive and samples non-zero");
    }
    std::vector<double> freqs;
    if (frequencies) {
        freqs = *frequencies;
    } else {
        try {
            freqs = decompose(l).frequencies;
        } catch (const NumericHealthError&) {
            freqs = {0.0};
        }
    }
    if (freqs.empty()) {
        freqs = {0.0};
    }
    const SuperoperatorMatrix sup = build_superoperator(l);
    const auto n = sup.matrix().rows();
    const double h = horizon / static_cast<double>(samples);
    const ComplexMatrix step = linalg::matrix_exp(h * sup.matrix());
    ComplexMatrix power = ComplexMatrix::Identity(n, n);
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t k = 0; k <= samples; ++k) {
        const double t = h * static_cast<double>(k);
        const double u = static_cast<double>(k) / static_cast<double>(samples);
        double w = window == Window::Hann ? 1.0 - std::cos(two_pi * u) : 1.0;
        if (k == 0 || k == samples) {
            w *= 0.5;
        }
        Complex phase(0.0, 0.0);
        for (double f : freqs) {
            phase += std::exp(Complex(0.0, -f * t));
        }
        acc += (w * phase) * power;
        if (k < samples) {
            power = power * step;
        }
    }
    return SuperoperatorMatrix(acc * (h / horizon));
}

DensityMatrix asymptotic_evolution(const AsymptoticDecomposition& dec, const DensityMatrix& rho_in,
                                   const Hamiltonian& h_inf, double s) {
    if (rho_in.dim() != dec.dim || h_inf.dim() != dec.dim) {
        throw_shape("asymptotic_evolution", "dimensions do not match the decomposition");
    }
    const ComplexMatrix& h = h_inf.matrix();
    const ComplexMatrix outside = h - dec.p_a * h * dec.p_a;
    if (linalg::hs_norm(outside) > tol::kHermitian * std::max(1.0, linalg::hs_norm(h))) {
        throw_contract("asymptotic_evolution", "asymptotic Hamiltonian is not supported on P_A");
    }
    const ComplexMatrix projected = dec.p_inf.apply(rho_in.matrix());
    const ComplexMatrix u = linalg::matrix_exp(Complex(0.0, -s) * h);
    return DensityMatrix::repaired(u * projected * u.adjoint());
}

FourCorners four_corners(const ComplexMatrix& a, const AsymptoticDecomposition& dec) {
    if (static_cast<std::size_t>(a.rows()) != dec.dim || static_cast<std::size_t>(a.cols()) != dec.dim) {
        throw_shape("four_corners", "operator does not match the decomposition");
    }
    FourCorners c;
    c.top_left = dec.p_a * a * dec.p_a;
    c.top_right = dec.p_a * a * dec.q;
    c.bottom_left = dec.q * a * dec.p_a;
    c.bottom_right = dec.q * a * dec.q;
    return c;
}

CompSplit split_comp_noncomp(const ComplexMatrix& op, const comp::BasisPartition& partition) {
    if (static_cast<std::size_t>(op.rows()) != partition.dim() || op.rows() != op.cols()) {
        throw_shape("split_comp_noncomp", "operator does not match the partition");
    }
    CompSplit s;
    s.noncomputational = op;
    for (Eigen::Index i = 0; i < op.rows(); ++i) {
        for (Eigen::Index j = 0; j < op.cols(); ++j) {
            if (partition.outcome_of(static_cast<std::size_t>(i)) !=
                partition.outcome_of(static_cast<std::size_t>(j))) {
                s.noncomputational(i, j) = 0.0;
            }
        }
    }
    s.computational = op - s.noncomputational;
    return s;
}

double cross_block_mass(const ComplexMatrix& op, const comp::BasisPartition& partition) {
    return linalg::hs_norm(split_comp_noncomp(op, partition).computational);
}

bool dfs_commutes(const ComplexMatrix& op, const comp::BasisPartition& partition) {
    const CompSplit s = split_comp_noncomp(op, partition);
    const double gate = tol::kBlockStructure * std::max(1.0, linalg::hs_norm(op));
    return s.computational.cwiseAbs().maxCoeff() <= gate;
}

DephasingResult dephasing_check(const Lindbladian& l, const comp::BasisPartition& partition,
                                const DensityMatrix& rho, double t_resolve) {
    DephasingResult r;
    r.initial_coherence = cross_block_mass(rho.matrix(), partition);
    const DensityMatrix evolved = propagate(l, rho, t_resolve);
    r.residual_coherence = cross_block_mass(evolved.matrix(), partition);
    r.classical = r.residual_coherence <= 1e-6 * r.initial_coherence;
    return r;
}

} // namespace revtherm::gksl
