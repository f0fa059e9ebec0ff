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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "revtherm/channels.hpp"
#include "revtherm/errors.hpp"
#include "revtherm/qstate.hpp"
#include "revtherm/random.hpp"

namespace revtherm::quantum {
namespace {

namespace orc = revtherm::testing;
using linalg::identity;

DensityMatrix ket(std::size_t d, std::size_t i) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(i)) = 1.0;
    return DensityMatrix::from_pure(v);
}

std::vector<double> random_diag_populations(std::size_t d, random::Engine& rng) {
    return random::distribution(d, rng);
}

TEST(DensityMatrixType, RejectsInvalid) {
    ComplexMatrix m = identity(2);
    EXPECT_THROW(DensityMatrix{m}, ContractError); // trace 2
    m = identity(2) / 2.0;
    m(0, 1) = 0.3;
    EXPECT_THROW(DensityMatrix{m}, ContractError); // not Hermitian
    m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{m}, ContractError); // negative eigenvalue
    EXPECT_THROW(DensityMatrix{ComplexMatrix::Zero(2, 3)}, ShapeError);
}

TEST(DensityMatrixType, ClipsTinyNegativeEigenvalues) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0 + 5e-11;
    m(1, 1) = -5e-11;
    const DensityMatrix rho(m);
    EXPECT_GE(rho.eigenvalues().minCoeff(), 0.0);
}

TEST(Gibbs, InfiniteTemperatureIsMaximallyMixed) {
    random::Engine rng(31);
    const ThermoContext ctx(Hamiltonian(random::hermitian(4, rng)), 0.0);
    EXPECT_LE((gibbs_state(ctx).matrix() - identity(4) / 4.0).norm(), 1e-14);
}

TEST(Gibbs, LowTemperatureIsGroundState) {
    const ThermoContext ctx(Hamiltonian::diagonal({0.3, 0.0, 1.0}), 200.0);
    EXPECT_LE((gibbs_state(ctx).matrix() - ket(3, 1).matrix()).norm(), 1e-20);
}

TEST(Gibbs, TwoLevelPopulation) {
    const ThermoContext ctx(Hamiltonian::diagonal({0.0, 1.0}), 1.0);
    const DensityMatrix tau = gibbs_state(ctx);
    EXPECT_NEAR(tau.matrix()(0, 0).real(), 1.0 / (1.0 + std::exp(-1.0)), 1e-15);
    EXPECT_NEAR(log_partition_function(ctx), std::log(1.0 + std::exp(-1.0)), 1e-15);
}

TEST(Gibbs, CommutesWithHamiltonianAndSurvivesLargeEnergies) {
    random::Engine rng(32);
    const Hamiltonian h(random::hermitian(4, rng) * 500.0);
    const ThermoContext ctx(h, 3.0);
    const DensityMatrix tau = gibbs_state(ctx);
    EXPECT_TRUE(tau.matrix().allFinite());
    EXPECT_LE(linalg::commutator(tau.matrix(), h.matrix()).norm(), 1e-9);
    EXPECT_NEAR(tau.matrix().trace().real(), 1.0, 1e-12);
}

TEST(EvolveUnitary, IdentityAndSpectrum) {
    random::Engine rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = random::density(4, rng);
        EXPECT_LE((evolve_unitary(rho, identity(4)).matrix() - rho.matrix()).norm(), 1e-15);
        const DensityMatrix out = evolve_unitary(rho, random::unitary(4, rng));
        EXPECT_LE((out.eigenvalues() - rho.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(von_neumann_entropy(out), orc::vn_entropy(rho.matrix()), 1e-9);
    }
}

TEST(EvolveUnitary, RejectsNonUnitary) {
    EXPECT_THROW(evolve_unitary(DensityMatrix::maximally_mixed(2), 2.0 * identity(2)), ContractError);
}

TEST(Shannon, Examples) {
    EXPECT_EQ(shannon_entropy({0.0, 1.0, 0.0}), 0.0);
    EXPECT_NEAR(shannon_entropy({0.2, 0.2, 0.2, 0.2, 0.2}), std::log(5.0), 1e-15);
    EXPECT_NEAR(shannon_entropy({0.25, 0.75}), -0.25 * std::log(0.25) - 0.75 * std::log(0.75), 1e-15);
    EXPECT_THROW(shannon_entropy({0.5, 0.6}), ContractError);
    EXPECT_THROW(shannon_entropy({1.1, -0.1}), ContractError);
}

TEST(VonNeumann, Examples) {
    EXPECT_NEAR(von_neumann_entropy(ket(3, 2)), 0.0, 1e-15);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(6)), std::log(6.0), 1e-14);
    random::Engine rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = random::density(5, rng);
        EXPECT_NEAR(von_neumann_entropy(rho), orc::vn_entropy(rho.matrix()), 1e-12);
    }
}

TEST(VonNeumann, Additive) {
    random::Engine rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix a = random::density(2, rng);
        const DensityMatrix b = random::density(3, rng);
        EXPECT_NEAR(von_neumann_entropy(tensor(a, b)), von_neumann_entropy(a) + von_neumann_entropy(b), 1e-9);
    }
}

TEST(RelativeEntropy, Examples) {
    random::Engine rng(36);
    const DensityMatrix rho = random::density(3, rng);
    EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-12);
    EXPECT_EQ(relative_entropy(ket(2, 0), ket(2, 1)), std::numeric_limits<double>::infinity());
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_diag_populations(4, rng);
        const auto q = random_diag_populations(4, rng);
        EXPECT_NEAR(relative_entropy(DensityMatrix::diagonal(p), DensityMatrix::diagonal(q)),
                    orc::classical_kl(p, q), 1e-12);
        const DensityMatrix s = random::density(4, rng);
        EXPECT_GE(relative_entropy(random::density(4, rng), s), 0.0);
    }
}

TEST(RelativeEntropy, ToGibbsMatchesGeneralForm) {
    random::Engine rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const ThermoContext ctx(Hamiltonian(random::hermitian(3, rng)), 0.7);
        const DensityMatrix rho = random::density(3, rng);
        EXPECT_NEAR(relative_entropy_to_gibbs(rho, ctx), relative_entropy(rho, gibbs_state(ctx)), 1e-10);
    }
}

TEST(RelativeEntropy, ToGibbsHandlesTinyPopulations) {
    const ThermoContext ctx(Hamiltonian::diagonal({0.0, 40.0}), 1.0);
    const DensityMatrix excited = ket(2, 1);
    // S(|1><1| || tau) = -ln tau_1 = 40 + ln(1 + e^-40).
    EXPECT_NEAR(relative_entropy_to_gibbs(excited, ctx), 40.0 + std::log1p(std::exp(-40.0)), 1e-12);
}

TEST(AlphaRre, VanishesOnEqualStates) {
    random::Engine rng(38);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = random::density(3, rng);
        EXPECT_LE(std::abs(alpha_rre(rho, rho, 0.5)), 1e-10);
        EXPECT_LE(std::abs(alpha_rre(rho, rho, 2.0)), 1e-10);
    }
}

TEST(AlphaRre, ContinuousAtOne) {
    random::Engine rng(39);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random::density(3, rng);
        const DensityMatrix sigma = random::density(3, rng);
        const double d1 = relative_entropy(rho, sigma);
        EXPECT_NEAR(alpha_rre(rho, sigma, 1.0 - 1e-6), d1, 1e-4);
        EXPECT_NEAR(alpha_rre(rho, sigma, 1.0 + 1e-6), d1, 1e-4);
        EXPECT_EQ(alpha_rre(rho, sigma, 1.0), d1);
    }
}

TEST(AlphaRre, DiagonalPairsMatchClassicalRenyi) {
    random::Engine rng(40);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_diag_populations(4, rng);
        const auto q = random_diag_populations(4, rng);
        const DensityMatrix rp = DensityMatrix::diagonal(p);
        const DensityMatrix rq = DensityMatrix::diagonal(q);
        for (double a : {0.25, 0.5, 0.75, 1.5, 2.0, 3.0}) {
            EXPECT_NEAR(alpha_rre(rp, rq, a), orc::classical_renyi(p, q, a), 1e-9) << "alpha " << a;
        }
    }
}

TEST(AlphaRre, SandwichedSupportViolationIsInfinite) {
    EXPECT_EQ(alpha_rre(ket(2, 0), ket(2, 1), 2.0), std::numeric_limits<double>::infinity());
}

TEST(AlphaRre, ExcludedOrdersThrow) {
    const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
    EXPECT_THROW(alpha_rre(rho, rho, 0.0), ContractError);
    EXPECT_THROW(alpha_rre(rho, rho, -1.0), ContractError);
    EXPECT_THROW(alpha_rre(rho, rho, std::nan("")), ContractError);
}

TEST(FreeEnergy, Examples) {
    const ThermoContext ctx(Hamiltonian::diagonal({0.0, 1.0, 2.5}), 0.8);
    EXPECT_NEAR(helmholtz_free_energy(gibbs_state(ctx), ctx), -log_partition_function(ctx) / 0.8, 1e-12);
    EXPECT_NEAR(helmholtz_free_energy(ket(3, 0), ctx), 0.0, 1e-15);
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
        EXPECT_NEAR(alpha_free_energy(gibbs_state(ctx), ctx, a), -log_partition_function(ctx) / 0.8, 1e-10);
    }
}

TEST(FreeEnergy, GibbsIsMinimal) {
    random::Engine rng(41);
    const ThermoContext ctx(Hamiltonian(random::hermitian(3, rng)), 1.3);
    const double f_tau = helmholtz_free_energy(gibbs_state(ctx), ctx);
    for (int trial = 0; trial < 100; ++trial) {
        EXPECT_GE(helmholtz_free_energy(random::density(3, rng), ctx), f_tau - 1e-12);
    }
}

TEST(FreeEnergy, AlphaOneIsHelmholtz) {
    random::Engine rng(42);
    const ThermoContext ctx(Hamiltonian(random::hermitian(3, rng)), 0.6);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = random::density(3, rng);
        EXPECT_NEAR(alpha_free_energy(rho, ctx, 1.0), helmholtz_free_energy(rho, ctx), 1e-9);
    }
}

TEST(FreeEnergy, NondecreasingInAlphaOnCommutingStates) {
    random::Engine rng(43);
    const std::vector<double> grid{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 50.0};
    for (int trial = 0; trial < 50; ++trial) {
        const ThermoContext ctx(Hamiltonian::diagonal({0.0, 0.4, 1.1, 2.0}), 1.0);
        const DensityMatrix rho = DensityMatrix::diagonal(random::distribution(4, rng));
        double prev = -std::numeric_limits<double>::infinity();
        for (double a : grid) {
            const double f = alpha_free_energy(rho, ctx, a);
            EXPECT_GE(f, prev - 1e-10) << "alpha " << a;
            prev = f;
        }
    }
}

TEST(MutualInformation, Examples) {
    random::Engine rng(44);
    const DensityMatrix a = random::density(2, rng);
    const DensityMatrix b = random::density(3, rng);
    EXPECT_NEAR(quantum_mutual_information(tensor(a, b), 2, 3), 0.0, 1e-12);

    const DensityMatrix correlated = DensityMatrix::diagonal({0.5, 0.0, 0.0, 0.5});
    EXPECT_NEAR(quantum_mutual_information(correlated, 2, 2), std::log(2.0), 1e-14);

    ComplexVector phi = ComplexVector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(quantum_mutual_information(DensityMatrix::from_pure(phi), 2, 2), 2.0 * std::log(2.0), 1e-12);
}

TEST(MutualInformation, MatchesRelativeEntropyForm) {
    random::Engine rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix ab = random::density(6, rng);
        const DensityMatrix ra = partial_trace(ab, 2, 3, linalg::Subsystem::A);
        const DensityMatrix rb = partial_trace(ab, 2, 3, linalg::Subsystem::B);
        EXPECT_NEAR(quantum_mutual_information(ab, 2, 3), relative_entropy(ab, tensor(ra, rb)), 1e-9);
    }
}

TEST(DataProcessing, RelativeEntropyContracts) {
    random::Engine rng(46);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix env = random::density(2, rng);
        const channels::DilationSpec spec(3, 2, random::unitary(6, rng), env);
        const DensityMatrix rho = random::density(3, rng);
        const DensityMatrix sigma = random::density(3, rng);
        const double before = relative_entropy(rho, sigma);
        const double after =
            relative_entropy(channels::apply_dilation(spec, rho), channels::apply_dilation(spec, sigma));
        EXPECT_GE(before, after - 1e-9);
    }
}

TEST(TraceDistance, Basics) {
    EXPECT_NEAR(trace_distance(ket(2, 0), ket(2, 1)), 1.0, 1e-15);
    EXPECT_NEAR(trace_distance(ket(2, 0), ket(2, 0)), 0.0, 1e-15);
}

} // namespace
} // namespace revtherm::quantum
