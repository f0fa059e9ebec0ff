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

#include "revtherm/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace revtherm::random {

using linalg::Complex;
using linalg::ComplexMatrix;

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Engine& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    return g;
}

ComplexMatrix unitary(std::size_t d, Engine& rng) {
    const ComplexMatrix g = ginibre(d, d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const double a = std::abs(r(k, k));
        if (a > 0.0) {
            q.col(k) *= r(k, k) / a;
        }
    }
    return q;
}

ComplexMatrix hermitian(std::size_t d, Engine& rng) {
    const ComplexMatrix g = ginibre(d, d, rng);
    return 0.5 * (g + g.adjoint());
}

quantum::DensityMatrix density(std::size_t d, Engine& rng, std::size_t rank) {
    const std::size_t k = rank == 0 ? d : rank;
    const ComplexMatrix g = ginibre(d, k, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return quantum::DensityMatrix(linalg::hermitian_part(rho));
}

std::vector<double> distribution(std::size_t n, Engine& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(n);
    double total = 0.0;
    for (auto& x : p) {
        x = expo(rng);
        total += x;
    }
    for (auto& x : p) {
        x /= total;
    }
    return p;
}

} // namespace revtherm::random
