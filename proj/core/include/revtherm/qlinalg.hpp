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

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Dense>

namespace revtherm::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Column-stacked image |A>> of a square operator A.
class VectorizedOperator {
public:
    VectorizedOperator() = default;
    /// Throws ShapeError unless `entries.size()` is a perfect square.
    explicit VectorizedOperator(ComplexVector entries);

    const ComplexVector& entries() const { return entries_; }
    std::size_t size() const { return static_cast<std::size_t>(entries_.size()); }
    /// Side length d of the operator this vector came from.
    std::size_t operator_dim() const { return operator_dim_; }

private:
    ComplexVector entries_;
    std::size_t operator_dim_ = 0;
};

enum class Subsystem { A, B };

/// Kronecker product a (x) b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out one factor of a d_a * d_b operator and return the kept factor.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t d_a, std::size_t d_b,
                            Subsystem keep);

struct HermitianEigen {
    RealVector values;     ///< ascending
    ComplexMatrix vectors; ///< unitary, columns are eigenvectors
};

/// Throws ContractError when `h` fails the Hermiticity gate.
HermitianEigen eig_hermitian(const ComplexMatrix& h);

enum class EigenStatus { Ok, NonDiagonalizable };

struct GeneralEigen {
    EigenStatus status = EigenStatus::Ok;
    ComplexVector values;
    ComplexMatrix right; ///< columns |p_a>>
    ComplexMatrix left;  ///< rows <<q_a|, with left * right = I when status is Ok
    double condition = 1.0; ///< 2-norm condition number of `right`
};

/// Eigenvalues are sorted by descending real part, then ascending imaginary part.
GeneralEigen eig_general(const ComplexMatrix& m);

enum class ExpMethod { Auto, Spectral, Series };

/// Auto uses the spectral route when the matrix is diagonalizable within the
/// gate and scaling-and-squaring otherwise.
ComplexMatrix matrix_exp(const ComplexMatrix& m, ExpMethod method = ExpMethod::Auto);

VectorizedOperator vectorize(const ComplexMatrix& a);
ComplexMatrix devectorize(const VectorizedOperator& v);
ComplexMatrix devectorize(const ComplexVector& v);

/// Superoperator S with S|A>> = |B A C>>, i.e. C^T (x) B.
ComplexMatrix vec_product_map(const ComplexMatrix& b, const ComplexMatrix& c);

/// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const ComplexMatrix& a);
/// Tr(A^dag B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_square(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& h, double rel_tol);
bool is_hermitian(const ComplexMatrix& h);
bool is_unitary(const ComplexMatrix& u, double tol);
bool is_unitary(const ComplexMatrix& u);
bool all_finite(const ComplexMatrix& m);

ComplexMatrix identity(std::size_t d);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// f(H) = V diag(f(lambda)) V^dag for Hermitian H.
ComplexMatrix apply_hermitian_function(const ComplexMatrix& h,
                                       const std::function<double(double)>& f);

/// Trace norm ||A||_1 of a Hermitian matrix (sum of |eigenvalues|).
double trace_norm_hermitian(const ComplexMatrix& h);

} // namespace revtherm::linalg
