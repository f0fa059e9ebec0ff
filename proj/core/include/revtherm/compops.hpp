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
#include <optional>
#include <vector>

#include "revtherm/compmodel.hpp"

namespace revtherm::comp {

using IndexSet = std::vector<std::size_t>;

/// Classical operation as a row-stochastic matrix. Row i is the distribution
/// over final states given initial state i; rows may be absent (partial domain).
class StochasticOp {
public:
    using Row = std::optional<std::vector<double>>;

    /// Throws ContractError on malformed rows.
    StochasticOp(std::size_t n_in, std::size_t n_out, std::vector<Row> rows);

    /// map[i] is the image of i, or nullopt outside the domain.
    static StochasticOp deterministic(std::size_t n_out, const std::vector<std::optional<std::size_t>>& map);
    static StochasticOp identity(std::size_t n);
    /// Every state goes to `target`.
    static StochasticOp erase(std::size_t n, std::size_t target = 0);

    std::size_t n_in() const { return n_in_; }
    std::size_t n_out() const { return n_out_; }
    bool has_row(std::size_t i) const { return i < rows_.size() && rows_[i].has_value(); }
    /// Throws ContractError when i is outside the domain.
    const std::vector<double>& row(std::size_t i) const;
    IndexSet domain() const;

private:
    std::size_t n_in_;
    std::size_t n_out_;
    std::vector<Row> rows_;
};

/// Every row in `over` (default: the domain) is a point distribution.
bool is_deterministic(const StochasticOp& op, const std::optional<IndexSet>& over = std::nullopt);
/// No final state receives positive probability from two distinct initial states in `over`.
bool is_reversible(const StochasticOp& op, const std::optional<IndexSet>& over = std::nullopt);
/// Deterministic ops only (ContractError otherwise): true iff two domain states merge.
bool is_entropy_ejecting(const StochasticOp& op);

/// An operation together with its input distribution.
class ContextualizedComputation {
public:
    /// Throws ContractError if the input is not a distribution over the op's
    /// initial states or has support outside the domain.
    ContextualizedComputation(StochasticOp op, std::vector<double> input);

    const StochasticOp& op() const { return op_; }
    const std::vector<double>& input() const { return input_; }
    /// Indices with probability above 1e-12.
    IndexSet support() const;
    /// P_out[j] = sum_i P_in[i] * row_i[j].
    std::vector<double> output() const;

private:
    StochasticOp op_;
    std::vector<double> input_;
};

struct EntropyDelta {
    double delta_h = 0.0;            ///< H(P_out) - H(P_in), nats
    double min_delta_s_nc = 0.0;     ///< max(0, -delta_h)
};

EntropyDelta computational_entropy_delta(const ContextualizedComputation& c);

/// (not entropy-ejecting) == (unconditionally reversible). Deterministic ops only.
bool check_traditional_theorem(const StochasticOp& op);
/// (delta H >= -1e-12) == (reversible over the support of P). Deterministic ops only.
bool check_generalized_theorem(const ContextualizedComputation& c);

/// I(X;Y) of a joint distribution given as a matrix, in nats.
double landauer_cost_oblivious_erasure(const linalg::RealMatrix& joint);

struct ImplementsReport {
    bool implements = true;
    /// Total-variation distance per initial outcome; nullopt for zero-probability outcomes.
    std::vector<std::optional<double>> distances;
    double max_distance = 0.0;
};

/// Restrict the context to each occupied input outcome, evolve by u, and
/// compare the output block masses with the op's row.
ImplementsReport implements_report(const linalg::ComplexMatrix& u, const BasisPartition& p_in,
                                   const BasisPartition& p_out, const StochasticOp& op,
                                   const QuantumContext& ctx, double tol = 1e-9);
bool implements(const linalg::ComplexMatrix& u, const BasisPartition& p_in,
                const BasisPartition& p_out, const StochasticOp& op, const QuantumContext& ctx,
                double tol = 1e-9);

bool operator==(const BasisPartition& a, const BasisPartition& b);

} // namespace revtherm::comp
