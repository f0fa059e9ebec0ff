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

#include "revtherm/qstate.hpp"

namespace revtherm::comp {

using quantum::DensityMatrix;

/// Partition of a basis {0..dim-1} into computational blocks. Indices not in
/// any block form the catch-all block, which is reported as an extra trailing
/// outcome whenever it is non-empty.
class BasisPartition {
public:
    /// Throws ContractError on empty, overlapping or out-of-range blocks.
    BasisPartition(std::size_t dim, std::vector<std::vector<std::size_t>> blocks);

    /// One block per basis index.
    static BasisPartition singletons(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    const std::vector<std::size_t>& catch_all() const { return catch_all_; }
    bool has_catch_all() const { return !catch_all_.empty(); }
    /// block_count() plus one if the catch-all block is non-empty.
    std::size_t outcome_count() const;
    /// Indices belonging to outcome `c` (the catch-all is outcome block_count()).
    const std::vector<std::size_t>& outcome_indices(std::size_t c) const;
    /// Outcome label of basis index `i`.
    std::size_t outcome_of(std::size_t i) const { return label_[i]; }

private:
    std::size_t dim_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> catch_all_;
    std::vector<std::size_t> label_;
};

bool validate_block_diagonal(const DensityMatrix& rho, const BasisPartition& p);

/// Zero every entry that couples two different outcomes.
DensityMatrix pinch(const DensityMatrix& rho, const BasisPartition& p);

class QuantumContext {
public:
    /// Throws ContractError unless `state` is block-diagonal for `partition`.
    QuantumContext(DensityMatrix state, BasisPartition partition);

    const DensityMatrix& state() const { return state_; }
    const BasisPartition& partition() const { return partition_; }

private:
    DensityMatrix state_;
    BasisPartition partition_;
};

/// P(c) = sum of populations over each outcome's indices.
std::vector<double> computational_distribution(const DensityMatrix& rho, const BasisPartition& p);
std::vector<double> computational_distribution(const QuantumContext& ctx);

struct EntropyDecomposition {
    double total = 0.0;
    double computational = 0.0;
    double noncomputational = 0.0;
};

EntropyDecomposition entropy_decompose(const QuantumContext& ctx);

/// Un-normalized restriction: entries outside outcome `c` rows and columns zeroed.
linalg::ComplexMatrix block_restriction(const QuantumContext& ctx, std::size_t c);
/// Normalized restriction. Throws ContractError when P(c) <= 1e-12.
QuantumContext restrict_context(const QuantumContext& ctx, std::size_t c);

} // namespace revtherm::comp
