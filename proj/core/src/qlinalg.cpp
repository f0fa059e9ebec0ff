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

#include "revtherm/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "revtherm/errors.hpp"
#include "revtherm/tolerances.hpp"

namespace revtherm::linalg {

namespace {

std::size_t exact_sqrt(std::size_t n) {
    auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

std::string shape_of(const ComplexMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

ComplexMatrix exp_series(const ComplexMatrix& m) {
    const Eigen::Index n = m.rows();
    const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const ComplexMatrix a = m / std::ldexp(1.0, squarings);

    ComplexMatrix result = ComplexMatrix::Identity(n, n);
    ComplexMatrix term = ComplexMatrix::Identity(n, n);
    for (int k = 1; k <= 30; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() <= 1e-18 * std::max(1.0, result.cwiseAbs().maxCoeff())) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    return result;
}

ComplexMatrix exp_spectral(const GeneralEigen& eig) {
    ComplexVector e = eig.values.array().exp();
    return eig.right * e.asDiagonal() * eig.left;
}

} // namespace

VectorizedOperator::VectorizedOperator(ComplexVector entries) : entries_(std::move(entries)) {
    const auto n = static_cast<std::size_t>(entries_.size());
    const std::size_t d = exact_sqrt(n);
    if (d * d != n) {
        throw_shape("VectorizedOperator", "length " + std::to_string(n) + " is not a perfect square");
    }
    operator_dim_ = d;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t d_a, std::size_t d_b,
                            Subsystem keep) {
    const auto n = static_cast<Eigen::Index>(d_a * d_b);
    if (d_a == 0 || d_b == 0 || rho.rows() != n || rho.cols() != n) {
        throw_shape("partial_trace", "operator " + shape_of(rho) + " does not match dims (" +
                                         std::to_string(d_a) + "," + std::to_string(d_b) + ")");
    }
    const auto da = static_cast<Eigen::Index>(d_a);
    const auto db = static_cast<Eigen::Index>(d_b);
    if (keep == Subsystem::A) {
        ComplexMatrix out = ComplexMatrix::Zero(da, da);
        for (Eigen::Index i = 0; i < da; ++i) {
            for (Eigen::Index j = 0; j < da; ++j) {
                out(i, j) = rho.block(i * db, j * db, db, db).trace();
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < da; ++i) {
        out += rho.block(i * db, i * db, db, db);
    }
    return out;
}

HermitianEigen eig_hermitian(const ComplexMatrix& h) {
    if (!is_square(h)) {
        throw_shape("eig_hermitian", "matrix " + shape_of(h) + " is not square");
    }
    if (!is_hermitian(h)) {
        throw_contract("eig_hermitian", "matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(h));
    if (solver.info() != Eigen::Success) {
        throw NumericHealthError("eig_hermitian: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

GeneralEigen eig_general(const ComplexMatrix& m) {
    if (!is_square(m)) {
        throw_shape("eig_general", "matrix " + shape_of(m) + " is not square");
    }
    GeneralEigen out;
    const Eigen::Index n = m.rows();
    if (n == 0) {
        return out;
    }
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, true);
    if (solver.info() != Eigen::Success) {
        throw NumericHealthError("eig_general: eigensolver did not converge");
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const ComplexVector& vals = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        if (vals(x).real() != vals(y).real()) {
            return vals(x).real() > vals(y).real();
        }
        return vals(x).imag() < vals(y).imag();
    });

    out.values.resize(n);
    out.right.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.values(k) = vals(src);
        ComplexVector v = solver.eigenvectors().col(src);
        const double nv = v.norm();
        out.right.col(k) = nv > 0.0 ? ComplexVector(v / nv) : v;
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(out.right);
    const RealVector& sv = svd.singularValues();
    const double smin = sv(n - 1);
    out.condition = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
    if (!(out.condition <= tol::kDiagonalizableCondition)) {
        out.status = EigenStatus::NonDiagonalizable;
        out.left.resize(0, 0);
        return out;
    }
    out.left = out.right.partialPivLu().inverse();
    return out;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m, ExpMethod method) {
    if (!is_square(m)) {
        throw_shape("matrix_exp", "matrix " + shape_of(m) + " is not square");
    }
    if (m.rows() == 0) {
        return m;
    }
    switch (method) {
    case ExpMethod::Series:
        return exp_series(m);
    case ExpMethod::Spectral: {
        const GeneralEigen eig = eig_general(m);
        if (eig.status != EigenStatus::Ok) {
            throw NumericHealthError("matrix_exp: spectral method requested on a defective matrix");
        }
        return exp_spectral(eig);
    }
    case ExpMethod::Auto:
    default: {
        const GeneralEigen eig = eig_general(m);
        if (eig.status == EigenStatus::Ok) {
            return exp_spectral(eig);
        }
        return exp_series(m);
    }
    }
}

VectorizedOperator vectorize(const ComplexMatrix& a) {
    if (!is_square(a)) {
        throw_shape("vectorize", "matrix " + shape_of(a) + " is not square");
    }
    // Eigen storage is column-major, so the raw buffer is already column-stacked.
    ComplexVector v = Eigen::Map<const ComplexVector>(a.data(), a.size());
    return VectorizedOperator(std::move(v));
}

ComplexMatrix devectorize(const VectorizedOperator& v) {
    const auto d = static_cast<Eigen::Index>(v.operator_dim());
    return Eigen::Map<const ComplexMatrix>(v.entries().data(), d, d);
}

ComplexMatrix devectorize(const ComplexVector& v) {
    return devectorize(VectorizedOperator(v));
}

ComplexMatrix vec_product_map(const ComplexMatrix& b, const ComplexMatrix& c) {
    if (!is_square(b) || !is_square(c) || b.rows() != c.rows()) {
        throw_shape("vec_product_map",
                    "operands " + shape_of(b) + " and " + shape_of(c) + " are incompatible");
    }
    return tensor(c.transpose(), b);
}

double hs_norm(const ComplexMatrix& a) {
    return a.norm();
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw_shape("hs_inner", "operands " + shape_of(a) + " and " + shape_of(b) + " differ");
    }
    return (a.adjoint() * b).trace();
}

bool is_square(const ComplexMatrix& m) {
    return m.rows() == m.cols();
}

bool is_hermitian(const ComplexMatrix& h, double rel_tol) {
    if (!is_square(h) || !all_finite(h)) {
        return false;
    }
    return (h - h.adjoint()).norm() <= rel_tol * std::max(1.0, h.norm());
}

bool is_hermitian(const ComplexMatrix& h) {
    return is_hermitian(h, tol::kHermitian);
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (!is_square(u) || !all_finite(u)) {
        return false;
    }
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

bool is_unitary(const ComplexMatrix& u) {
    return is_unitary(u, tol::kUnitary);
}

bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

ComplexMatrix identity(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    return 0.5 * (m + m.adjoint());
}

ComplexMatrix apply_hermitian_function(const ComplexMatrix& h,
                                       const std::function<double(double)>& f) {
    const HermitianEigen eig = eig_hermitian(h);
    RealVector fv(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        fv(i) = f(eig.values(i));
    }
    return eig.vectors * fv.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

double trace_norm_hermitian(const ComplexMatrix& h) {
    return eig_hermitian(h).values.cwiseAbs().sum();
}

} // namespace revtherm::linalg
