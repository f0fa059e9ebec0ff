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
#include <optional>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "revtherm/compops.hpp"
#include "revtherm/errors.hpp"
#include "revtherm/random.hpp"

namespace revtherm::comp {
namespace {

namespace orc = revtherm::testing;
using linalg::ComplexMatrix;

std::vector<std::vector<std::size_t>> all_maps(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> m(n, 0);
    while (true) {
        out.push_back(m);
        std::size_t k = 0;
        while (k < n && ++m[k] == n) {
            m[k++] = 0;
        }
        if (k == n) {
            break;
        }
    }
    return out;
}

StochasticOp from_map(const std::vector<std::size_t>& m) {
    std::vector<std::optional<std::size_t>> o(m.begin(), m.end());
    return StochasticOp::deterministic(m.size(), o);
}

TEST(Op, RowsValidated) {
    EXPECT_THROW(StochasticOp(2, 2, {std::vector<double>{0.5, 0.6}, std::nullopt}), ContractError);
    EXPECT_THROW(StochasticOp(2, 2, {std::vector<double>{1.5, -0.5}, std::nullopt}), ContractError);
    EXPECT_THROW(StochasticOp(2, 2, {std::vector<double>{1.0}}), ShapeError);
    const StochasticOp partial(2, 2, {std::vector<double>{1.0, 0.0}, std::nullopt});
    EXPECT_EQ(partial.domain(), IndexSet{0});
    EXPECT_THROW(partial.row(1), ContractError);
}

TEST(Deterministic, Examples) {
    EXPECT_TRUE(is_deterministic(StochasticOp::identity(3)));
    EXPECT_TRUE(is_deterministic(StochasticOp::erase(2)));
    const StochasticOp split(1, 2, {std::vector<double>{0.5, 0.5}});
    EXPECT_FALSE(is_deterministic(split));
}

TEST(Reversible, Examples) {
    EXPECT_TRUE(is_reversible(StochasticOp::identity(3)));
    EXPECT_FALSE(is_reversible(StochasticOp::erase(2)));
    EXPECT_TRUE(is_reversible(StochasticOp::erase(2), IndexSet{0}));
    const StochasticOp split(2, 3, {std::vector<double>{0.5, 0.5, 0.0}, std::vector<double>{0.0, 0.0, 1.0}});
    EXPECT_TRUE(is_reversible(split));
    EXPECT_FALSE(is_deterministic(split));
    EXPECT_THROW(is_reversible(StochasticOp(2, 2, {std::vector<double>{1.0, 0.0}, std::nullopt}), IndexSet{1}),
                 ContractError);
}

TEST(EntropyEjecting, ExhaustiveThreeStates) {
    // Worst-case oracle: a deterministic op is entropy-ejecting iff some input on
    // a simplex grid strictly lowers the output Shannon entropy.
    const std::size_t n = 3;
    std::vector<std::vector<double>> grid;
    const int steps = 10;
    for (int a = 0; a <= steps; ++a) {
        for (int b = 0; a + b <= steps; ++b) {
            grid.push_back({a / double(steps), b / double(steps), (steps - a - b) / double(steps)});
        }
    }
    for (const auto& m : all_maps(n)) {
        bool ejects = false;
        for (const auto& p : grid) {
            std::vector<double> out(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                out[m[i]] += p[i];
            }
            if (orc::shannon(out) < orc::shannon(p) - 1e-12) {
                ejects = true;
                break;
            }
        }
        EXPECT_EQ(is_entropy_ejecting(from_map(m)), ejects);
        EXPECT_EQ(is_entropy_ejecting(from_map(m)), !orc::injective(m, {0, 1, 2}));
    }
}

TEST(EntropyEjecting, StochasticThrows) {
    EXPECT_THROW(is_entropy_ejecting(StochasticOp(1, 2, {std::vector<double>{0.5, 0.5}})), ContractError);
    EXPECT_FALSE(is_entropy_ejecting(StochasticOp::identity(4)));
    EXPECT_TRUE(is_entropy_ejecting(StochasticOp::erase(2)));
}

TEST(EntropyDelta, Examples) {
    const auto id = computational_entropy_delta(ContextualizedComputation(StochasticOp::identity(3), {0.2, 0.3, 0.5}));
    EXPECT_NEAR(id.delta_h, 0.0, 1e-15);
    EXPECT_EQ(id.min_delta_s_nc, 0.0);
    const auto er = computational_entropy_delta(ContextualizedComputation(StochasticOp::erase(2), {0.5, 0.5}));
    EXPECT_NEAR(er.delta_h, -std::log(2.0), 1e-15);
    EXPECT_NEAR(er.min_delta_s_nc, std::log(2.0), 1e-15);
}

TEST(EntropyDelta, MatchesPushforward) {
    random::Engine rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::size_t> m(5);
        for (auto& x : m) {
            x = rng() % 5;
        }
        const auto p = random::distribution(5, rng);
        std::vector<double> out(5, 0.0);
        for (std::size_t i = 0; i < 5; ++i) {
            out[m[i]] += p[i];
        }
        const ContextualizedComputation c(from_map(m), p);
        EXPECT_NEAR(computational_entropy_delta(c).delta_h, orc::shannon(out) - orc::shannon(p), 1e-13);
    }
}

TEST(Theorems, TraditionalExhaustiveFourStates) {
    std::size_t count = 0;
    for (const auto& m : all_maps(4)) {
        const StochasticOp op = from_map(m);
        EXPECT_TRUE(check_traditional_theorem(op));
        EXPECT_EQ(!is_entropy_ejecting(op), orc::injective(m, {0, 1, 2, 3}));
        ++count;
    }
    EXPECT_EQ(count, 256u);
}

TEST(Theorems, GeneralizedExamples) {
    const StochasticOp erase = StochasticOp::erase(2);
    const ContextualizedComputation on_zero(erase, {1.0, 0.0});
    EXPECT_TRUE(check_generalized_theorem(on_zero));
    EXPECT_GE(computational_entropy_delta(on_zero).delta_h, -1e-12);
    EXPECT_TRUE(is_reversible(erase, on_zero.support()));
    const ContextualizedComputation full(erase, {0.3, 0.7});
    EXPECT_TRUE(check_generalized_theorem(full));
    EXPECT_LT(computational_entropy_delta(full).delta_h, -1e-12);
    EXPECT_FALSE(is_reversible(erase, full.support()));
}

TEST(Composition, ReversibleOpsCompose) {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::vector<std::size_t>> reversible;
        for (const auto& m : all_maps(n)) {
            if (is_reversible(from_map(m))) {
                reversible.push_back(m);
            }
        }
        for (const auto& a : reversible) {
            for (const auto& b : reversible) {
                std::vector<std::size_t> ab(n);
                for (std::size_t i = 0; i < n; ++i) {
                    ab[i] = b[a[i]];
                }
                EXPECT_TRUE(is_reversible(from_map(ab)));
            }
        }
    }
}

TEST(ObliviousErasure, Examples) {
    linalg::RealMatrix indep(2, 2);
    indep << 0.12, 0.28, 0.18, 0.42;
    EXPECT_NEAR(landauer_cost_oblivious_erasure(indep), 0.0, 1e-15);
    linalg::RealMatrix corr(2, 2);
    corr << 0.5, 0.0, 0.0, 0.5;
    EXPECT_NEAR(landauer_cost_oblivious_erasure(corr), std::log(2.0), 1e-15);
}

TEST(ObliviousErasure, MatchesEntropyOracleAndIsNonNegative) {
    random::Engine rng(62);
    for (int trial = 0; trial < 50; ++trial) {
        const auto flat = random::distribution(9, rng);
        linalg::RealMatrix j(3, 3);
        std::vector<double> px(3, 0.0);
        std::vector<double> py(3, 0.0);
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                j(r, c) = flat[static_cast<std::size_t>(3 * r + c)];
                px[static_cast<std::size_t>(r)] += j(r, c);
                py[static_cast<std::size_t>(c)] += j(r, c);
            }
        }
        const double mi = orc::shannon(px) + orc::shannon(py) - orc::shannon(flat);
        EXPECT_NEAR(landauer_cost_oblivious_erasure(j), mi, 1e-13);
        EXPECT_GE(landauer_cost_oblivious_erasure(j), 0.0);
    }
}

TEST(ObliviousErasure, ZeroExactlyForProductsOnRationalGrid) {
    // Joints with entries k/8 on a 2x2 grid: zero cost iff the joint factorizes.
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; a + b <= 8; ++b) {
            for (int c = 0; a + b + c <= 8; ++c) {
                const int d = 8 - a - b - c;
                linalg::RealMatrix j(2, 2);
                j << a / 8.0, b / 8.0, c / 8.0, d / 8.0;
                const bool product = a * d == b * c;
                const double cost = landauer_cost_oblivious_erasure(j);
                if (product) {
                    EXPECT_NEAR(cost, 0.0, 1e-12);
                } else {
                    EXPECT_GT(cost, 1e-6);
                }
            }
        }
    }
}

ComplexMatrix perm_unitary(const std::vector<std::size_t>& perm) {
    const auto d = static_cast<Eigen::Index>(perm.size());
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        u(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return u;
}

TEST(Implements, IdentityOperation) {
    const BasisPartition p(4, {{0, 1}, {2, 3}});
    const QuantumContext ctx(DensityMatrix::maximally_mixed(4), p);
    EXPECT_TRUE(implements(linalg::identity(4), p, p, StochasticOp::identity(2), ctx));
}

TEST(Implements, BlockSwap) {
    const BasisPartition p(4, {{0, 1}, {2, 3}});
    const QuantumContext ctx(DensityMatrix::diagonal({0.1, 0.2, 0.3, 0.4}), p);
    const ComplexMatrix u = perm_unitary({2, 3, 0, 1});
    const StochasticOp swap = StochasticOp::deterministic(2, {1, 0});
    EXPECT_TRUE(implements(u, p, p, swap, ctx));
    EXPECT_FALSE(implements(u, p, p, StochasticOp::identity(2), ctx));
}

TEST(Implements, BornRuleSplit) {
    const BasisPartition p(2, {{0}, {1}});
    const double a = std::sqrt(1.0 / 3.0);
    const double b = std::sqrt(2.0 / 3.0);
    ComplexMatrix u(2, 2);
    u << a, -b, b, a;
    const QuantumContext ctx(DensityMatrix::diagonal({1.0, 0.0}), p);
    const StochasticOp split(2, 2, {std::vector<double>{1.0 / 3.0, 2.0 / 3.0}, std::nullopt});
    EXPECT_TRUE(implements(u, p, p, split, ctx));
    const auto rep = implements_report(u, p, p, split, ctx);
    ASSERT_EQ(rep.distances.size(), 2u);
    EXPECT_FALSE(rep.distances[1].has_value());
    EXPECT_LE(rep.max_distance, 1e-12);
}

TEST(Implements, ShapeMismatchThrows) {
    const BasisPartition p(2, {{0}, {1}});
    const QuantumContext ctx(DensityMatrix::diagonal({0.5, 0.5}), p);
    EXPECT_THROW(implements(linalg::identity(2), p, p, StochasticOp::identity(3), ctx), ShapeError);
    EXPECT_THROW(implements(linalg::identity(3), p, p, StochasticOp::identity(2), ctx), ShapeError);
}

TEST(Implements, InvariantUnderBlockLocalRotations) {
    random::Engine rng(63);
    const BasisPartition p(4, {{0, 1}, {2, 3}});
    const ComplexMatrix u = perm_unitary({2, 3, 0, 1});
    const StochasticOp swap = StochasticOp::deterministic(2, {1, 0});
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix v_in = ComplexMatrix::Zero(4, 4);
        ComplexMatrix v_out = ComplexMatrix::Zero(4, 4);
        v_in.block(0, 0, 2, 2) = random::unitary(2, rng);
        v_in.block(2, 2, 2, 2) = random::unitary(2, rng);
        v_out.block(0, 0, 2, 2) = random::unitary(2, rng);
        v_out.block(2, 2, 2, 2) = random::unitary(2, rng);
        const DensityMatrix rho = DensityMatrix::diagonal(random::distribution(4, rng));
        const QuantumContext ctx(rho, p);
        EXPECT_TRUE(implements(v_out * u * v_in, p, p, swap, ctx));
    }
}

} // namespace
} // namespace revtherm::comp
