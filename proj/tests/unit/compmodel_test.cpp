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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "revtherm/compmodel.hpp"
#include "revtherm/errors.hpp"
#include "revtherm/random.hpp"

namespace revtherm::comp {
namespace {

namespace orc = revtherm::testing;
using linalg::ComplexMatrix;

using testing::random_block_state;
using testing::random_partition;

TEST(Partition, RejectsBadBlocks) {
    EXPECT_THROW(BasisPartition(3, {{0, 1}, {1}}), ContractError);
    EXPECT_THROW(BasisPartition(3, {{0, 3}}), ContractError);
    EXPECT_THROW(BasisPartition(3, {{}}), ContractError);
}

TEST(Partition, CatchAllIsTrailingOutcome) {
    const BasisPartition p(4, {{2}, {0}});
    EXPECT_EQ(p.outcome_count(), 3u);
    EXPECT_EQ(p.outcome_indices(2), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(p.outcome_of(3), 2u);
    EXPECT_EQ(BasisPartition(2, {{0}, {1}}).outcome_count(), 2u);
}

TEST(BlockDiagonal, Examples) {
    const BasisPartition p(3, {{0, 1}, {2}});
    EXPECT_TRUE(validate_block_diagonal(DensityMatrix::diagonal({0.2, 0.3, 0.5}), p));
    ComplexMatrix m = orc::diag_state({0.5, 0.0, 0.5});
    m(0, 2) = m(2, 0) = 0.2;
    EXPECT_FALSE(validate_block_diagonal(DensityMatrix(m), p));
    EXPECT_THROW(QuantumContext(DensityMatrix(m), p), ContractError);
    ComplexMatrix inside = orc::diag_state({0.5, 0.5, 0.0});
    inside(0, 1) = inside(1, 0) = 0.4;
    EXPECT_TRUE(validate_block_diagonal(DensityMatrix(inside), p));
}

TEST(Pinch, RemovesCrossBlockCoherence) {
    const BasisPartition p(3, {{0, 1}, {2}});
    ComplexMatrix m = orc::diag_state({0.4, 0.2, 0.4});
    m(0, 2) = m(2, 0) = 0.1;
    m(0, 1) = m(1, 0) = 0.1;
    const DensityMatrix out = pinch(DensityMatrix(m), p);
    EXPECT_TRUE(validate_block_diagonal(out, p));
    EXPECT_EQ(out.matrix()(0, 1), linalg::Complex(0.1));
}

TEST(Distribution, Examples) {
    const BasisPartition two(4, {{0, 1}, {2, 3}});
    const auto d = computational_distribution(QuantumContext(DensityMatrix::maximally_mixed(4), two));
    ASSERT_EQ(d.size(), 2u);
    EXPECT_NEAR(d[0], 0.5, 1e-15);
    EXPECT_NEAR(d[1], 0.5, 1e-15);

    linalg::ComplexVector psi = linalg::ComplexVector::Zero(4);
    psi(0) = psi(1) = 1.0 / std::sqrt(2.0);
    const auto e = computational_distribution(QuantumContext(DensityMatrix::from_pure(psi), two));
    EXPECT_NEAR(e[0], 1.0, 1e-15);
    EXPECT_NEAR(e[1], 0.0, 1e-15);
}

TEST(Distribution, MatchesDiagonalSums) {
    random::Engine rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const BasisPartition p = random_partition(6, 3, rng);
        const DensityMatrix rho = random_block_state(p, rng);
        const auto dist = computational_distribution(QuantumContext(rho, p));
        double total = 0.0;
        for (std::size_t c = 0; c < p.outcome_count(); ++c) {
            double s = 0.0;
            for (std::size_t i : p.outcome_indices(c)) {
                s += rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
            }
            EXPECT_NEAR(dist[c], s, 1e-14);
            total += dist[c];
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(Distribution, InvariantUnderBlockLocalRotation) {
    random::Engine rng(52);
    const BasisPartition p(5, {{0, 3}, {1, 2, 4}});
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = random_block_state(p, rng);
        ComplexMatrix u = ComplexMatrix::Zero(5, 5);
        for (std::size_t c = 0; c < p.outcome_count(); ++c) {
            const auto& idx = p.outcome_indices(c);
            const ComplexMatrix local = random::unitary(idx.size(), rng);
            for (std::size_t a = 0; a < idx.size(); ++a) {
                for (std::size_t b = 0; b < idx.size(); ++b) {
                    u(static_cast<Eigen::Index>(idx[a]), static_cast<Eigen::Index>(idx[b])) =
                        local(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
                }
            }
        }
        const DensityMatrix rotated = quantum::evolve_unitary(rho, u);
        const auto d0 = computational_distribution(QuantumContext(rho, p));
        const auto d1 = computational_distribution(QuantumContext(rotated, p));
        for (std::size_t c = 0; c < d0.size(); ++c) {
            EXPECT_NEAR(d0[c], d1[c], 1e-12);
        }
    }
}

TEST(EntropyDecompose, Examples) {
    const BasisPartition two(4, {{0, 1}, {2, 3}});
    linalg::ComplexVector psi = linalg::ComplexVector::Zero(4);
    psi(2) = 1.0;
    const auto pure = entropy_decompose(QuantumContext(DensityMatrix::from_pure(psi), two));
    EXPECT_NEAR(pure.total, 0.0, 1e-15);
    EXPECT_NEAR(pure.computational, 0.0, 1e-15);
    EXPECT_NEAR(pure.noncomputational, 0.0, 1e-15);

    const auto mixed = entropy_decompose(QuantumContext(DensityMatrix::maximally_mixed(4), two));
    EXPECT_NEAR(mixed.total, std::log(4.0), 1e-14);
    EXPECT_NEAR(mixed.computational, std::log(2.0), 1e-14);
    EXPECT_NEAR(mixed.noncomputational, std::log(2.0), 1e-14);
}

TEST(EntropyDecompose, IdentityOnRandomStates) {
    random::Engine rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 16);
        const std::size_t d = dim(rng);
        const BasisPartition p = random_partition(d, 4, rng);
        const DensityMatrix rho = random_block_state(p, rng);
        const auto e = entropy_decompose(QuantumContext(rho, p));
        EXPECT_NEAR(e.total, orc::vn_entropy(rho.matrix()), 1e-10);
        EXPECT_NEAR(e.computational, orc::shannon(computational_distribution(rho, p)), 1e-12);
        EXPECT_LE(std::abs(e.total - e.computational - e.noncomputational), 1e-9);
    }
}

TEST(Restrict, Examples) {
    const BasisPartition two(4, {{0, 1}, {2, 3}});
    const QuantumContext ctx(DensityMatrix::maximally_mixed(4), two);
    const QuantumContext r = restrict_context(ctx, 0);
    EXPECT_LE((r.state().matrix() - orc::diag_state({0.5, 0.5, 0.0, 0.0})).norm(), 1e-15);
    const QuantumContext again = restrict_context(r, 0);
    EXPECT_LE((again.state().matrix() - r.state().matrix()).norm(), 1e-15);
    EXPECT_THROW(restrict_context(r, 1), ContractError);
}

TEST(Restrict, MassesReconstructState) {
    random::Engine rng(54);
    for (int trial = 0; trial < 50; ++trial) {
        const BasisPartition p = random_partition(7, 3, rng);
        const QuantumContext ctx(random_block_state(p, rng), p);
        const auto dist = computational_distribution(ctx);
        ComplexMatrix sum = ComplexMatrix::Zero(7, 7);
        for (std::size_t c = 0; c < p.outcome_count(); ++c) {
            const ComplexMatrix blk = block_restriction(ctx, c);
            EXPECT_NEAR(blk.trace().real(), dist[c], 1e-14);
            if (dist[c] > 1e-12) {
                sum += dist[c] * restrict_context(ctx, c).state().matrix();
            }
        }
        EXPECT_LE((sum - ctx.state().matrix()).norm(), 1e-10);
    }
}

} // namespace
} // namespace revtherm::comp
