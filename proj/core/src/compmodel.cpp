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

#include "revtherm/compmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "revtherm/errors.hpp"
#include "revtherm/tolerances.hpp"

namespace revtherm::comp {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

void require_dim(const DensityMatrix& rho, const BasisPartition& p, const char* where) {
    if (rho.dim() != p.dim()) {
        throw_shape(where, "state dimension " + std::to_string(rho.dim()) +
                               " does not match partition dimension " + std::to_string(p.dim()));
    }
}

} // namespace

BasisPartition::BasisPartition(std::size_t dim, std::vector<std::vector<std::size_t>> blocks)
    : dim_(dim), blocks_(std::move(blocks)), label_(dim, kUnassigned) {
    if (dim_ == 0) {
        throw_contract("BasisPartition", "dimension must be positive");
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty()) {
            throw_contract("BasisPartition", "block " + std::to_string(b) + " is empty");
        }
        for (std::size_t i : blocks_[b]) {
            if (i >= dim_) {
                throw_contract("BasisPartition", "index " + std::to_string(i) + " out of range");
            }
            if (label_[i] != kUnassigned) {
                throw_contract("BasisPartition",
                               "index " + std::to_string(i) + " appears in more than one block");
            }
            label_[i] = b;
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        if (label_[i] == kUnassigned) {
            label_[i] = blocks_.size();
            catch_all_.push_back(i);
        }
    }
}

BasisPartition BasisPartition::singletons(std::size_t dim) {
    std::vector<std::vector<std::size_t>> blocks(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        blocks[i] = {i};
    }
    return BasisPartition(dim, std::move(blocks));
}

std::size_t BasisPartition::outcome_count() const {
    return blocks_.size() + (catch_all_.empty() ? 0 : 1);
}

const std::vector<std::size_t>& BasisPartition::outcome_indices(std::size_t c) const {
    if (c < blocks_.size()) {
        return blocks_[c];
    }
    if (c == blocks_.size() && !catch_all_.empty()) {
        return catch_all_;
    }
    throw_contract("BasisPartition", "outcome " + std::to_string(c) + " out of range");
}

bool validate_block_diagonal(const DensityMatrix& rho, const BasisPartition& p) {
    require_dim(rho, p, "validate_block_diagonal");
    const auto& m = rho.matrix();
    const double gate = tol::kBlockStructure * std::max(1.0, linalg::hs_norm(m));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (p.outcome_of(static_cast<std::size_t>(i)) != p.outcome_of(static_cast<std::size_t>(j)) &&
                std::abs(m(i, j)) > gate) {
                return false;
            }
        }
    }
    return true;
}

DensityMatrix pinch(const DensityMatrix& rho, const BasisPartition& p) {
    require_dim(rho, p, "pinch");
    linalg::ComplexMatrix m = rho.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (p.outcome_of(static_cast<std::size_t>(i)) != p.outcome_of(static_cast<std::size_t>(j))) {
                m(i, j) = 0.0;
            }
        }
    }
    return DensityMatrix(m);
}

QuantumContext::QuantumContext(DensityMatrix state, BasisPartition partition)
    : state_(std::move(state)), partition_(std::move(partition)) {
    if (!validate_block_diagonal(state_, partition_)) {
        throw_contract("QuantumContext", "state is not block-diagonal for the partition");
    }
}

std::vector<double> computational_distribution(const DensityMatrix& rho, const BasisPartition& p) {
    require_dim(rho, p, "computational_distribution");
    std::vector<double> out(p.outcome_count(), 0.0);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        out[p.outcome_of(i)] += std::max(0.0, rho.matrix()(k, k).real());
    }
    return out;
}

std::vector<double> computational_distribution(const QuantumContext& ctx) {
    return computational_distribution(ctx.state(), ctx.partition());
}

EntropyDecomposition entropy_decompose(const QuantumContext& ctx) {
    EntropyDecomposition out;
    out.total = quantum::von_neumann_entropy(ctx.state());
    const std::vector<double> pc = computational_distribution(ctx);
    out.computational = quantum::shannon_entropy(pc);
    for (std::size_t c = 0; c < pc.size(); ++c) {
        if (pc[c] <= tol::kProbability) {
            continue;
        }
        const auto& idx = ctx.partition().outcome_indices(c);
        const auto n = static_cast<Eigen::Index>(idx.size());
        linalg::ComplexMatrix block(n, n);
        for (Eigen::Index a = 0; a < n; ++a) {
            for (Eigen::Index b = 0; b < n; ++b) {
                block(a, b) = ctx.state().matrix()(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(a)]),
                                                   static_cast<Eigen::Index>(idx[static_cast<std::size_t>(b)]));
            }
        }
        const DensityMatrix normalized = DensityMatrix::repaired(block / block.trace().real());
        out.noncomputational += pc[c] * quantum::von_neumann_entropy(normalized);
    }
    return out;
}

linalg::ComplexMatrix block_restriction(const QuantumContext& ctx, std::size_t c) {
    const BasisPartition& p = ctx.partition();
    if (c >= p.outcome_count()) {
        throw_contract("block_restriction", "outcome " + std::to_string(c) + " out of range");
    }
    linalg::ComplexMatrix m = ctx.state().matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (p.outcome_of(static_cast<std::size_t>(i)) != c ||
                p.outcome_of(static_cast<std::size_t>(j)) != c) {
                m(i, j) = 0.0;
            }
        }
    }
    return m;
}

QuantumContext restrict_context(const QuantumContext& ctx, std::size_t c) {
    const linalg::ComplexMatrix m = block_restriction(ctx, c);
    const double pc = m.trace().real();
    if (!(pc > tol::kProbability)) {
        throw_contract("restrict_context", "outcome " + std::to_string(c) + " has zero probability");
    }
    return QuantumContext(DensityMatrix::repaired(m / pc), ctx.partition());
}

} // namespace revtherm::comp
