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

#include "revtherm/compops.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "revtherm/errors.hpp"
#include "revtherm/tolerances.hpp"

namespace revtherm::comp {

namespace {

IndexSet resolve_subset(const StochasticOp& op, const std::optional<IndexSet>& over, const char* where) {
    if (!over) {
        return op.domain();
    }
    for (std::size_t i : *over) {
        if (!op.has_row(i)) {
            throw_contract(where, "state " + std::to_string(i) + " is outside the domain");
        }
    }
    return *over;
}

void require_deterministic(const StochasticOp& op, const char* where) {
    if (!is_deterministic(op)) {
        throw_contract(where, "operation is stochastic; the predicate covers deterministic ops");
    }
}

} // namespace

StochasticOp::StochasticOp(std::size_t n_in, std::size_t n_out, std::vector<Row> rows)
    : n_in_(n_in), n_out_(n_out), rows_(std::move(rows)) {
    if (n_in_ == 0 || n_out_ == 0) {
        throw_contract("StochasticOp", "state counts must be positive");
    }
    if (rows_.size() != n_in_) {
        throw_shape("StochasticOp", "expected " + std::to_string(n_in_) + " rows, got " +
                                        std::to_string(rows_.size()));
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!rows_[i]) {
            continue;
        }
        const auto& r = *rows_[i];
        if (r.size() != n_out_) {
            throw_shape("StochasticOp", "row " + std::to_string(i) + " has " +
                                            std::to_string(r.size()) + " entries, expected " +
                                            std::to_string(n_out_));
        }
        double total = 0.0;
        for (double x : r) {
            if (!std::isfinite(x) || x < 0.0) {
                throw_contract("StochasticOp", "row " + std::to_string(i) + " has a negative entry");
            }
            total += x;
        }
        if (std::abs(total - 1.0) > tol::kStochasticRow) {
            throw_contract("StochasticOp", "row " + std::to_string(i) + " sums to " + std::to_string(total));
        }
    }
}

StochasticOp StochasticOp::deterministic(std::size_t n_out,
                                         const std::vector<std::optional<std::size_t>>& map) {
    std::vector<Row> rows(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (!map[i]) {
            continue;
        }
        if (*map[i] >= n_out) {
            throw_contract("StochasticOp::deterministic", "image of " + std::to_string(i) + " out of range");
        }
        std::vector<double> r(n_out, 0.0);
        r[*map[i]] = 1.0;
        rows[i] = std::move(r);
    }
    return StochasticOp(map.size(), n_out, std::move(rows));
}

StochasticOp StochasticOp::identity(std::size_t n) {
    std::vector<std::optional<std::size_t>> map(n);
    for (std::size_t i = 0; i < n; ++i) {
        map[i] = i;
    }
    return deterministic(n, map);
}

StochasticOp StochasticOp::erase(std::size_t n, std::size_t target) {
    return deterministic(n, std::vector<std::optional<std::size_t>>(n, target));
}

const std::vector<double>& StochasticOp::row(std::size_t i) const {
    if (!has_row(i)) {
        throw_contract("StochasticOp::row", "state " + std::to_string(i) + " is outside the domain");
    }
    return *rows_[i];
}

IndexSet StochasticOp::domain() const {
    IndexSet d;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i]) {
            d.push_back(i);
        }
    }
    return d;
}

bool is_deterministic(const StochasticOp& op, const std::optional<IndexSet>& over) {
    for (std::size_t i : resolve_subset(op, over, "is_deterministic")) {
        const auto& r = op.row(i);
        if (*std::max_element(r.begin(), r.end()) < 1.0 - tol::kProbability) {
            return false;
        }
    }
    return true;
}

bool is_reversible(const StochasticOp& op, const std::optional<IndexSet>& over) {
    const IndexSet a = resolve_subset(op, over, "is_reversible");
    std::vector<std::size_t> sources(op.n_out(), 0);
    for (std::size_t i : a) {
        const auto& r = op.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] > tol::kProbability && ++sources[j] > 1) {
                return false;
            }
        }
    }
    return true;
}

bool is_entropy_ejecting(const StochasticOp& op) {
    require_deterministic(op, "is_entropy_ejecting");
    return !is_reversible(op);
}

ContextualizedComputation::ContextualizedComputation(StochasticOp op, std::vector<double> input)
    : op_(std::move(op)), input_(std::move(input)) {
    if (input_.size() != op_.n_in()) {
        throw_shape("ContextualizedComputation", "input distribution has " +
                                                     std::to_string(input_.size()) +
                                                     " entries, expected " + std::to_string(op_.n_in()));
    }
    quantum::validate_distribution(input_, "ContextualizedComputation");
    for (std::size_t i : support()) {
        if (!op_.has_row(i)) {
            throw_contract("ContextualizedComputation",
                           "input support includes state " + std::to_string(i) + " outside the domain");
        }
    }
}

IndexSet ContextualizedComputation::support() const {
    IndexSet s;
    for (std::size_t i = 0; i < input_.size(); ++i) {
        if (input_[i] > tol::kProbability) {
            s.push_back(i);
        }
    }
    return s;
}

std::vector<double> ContextualizedComputation::output() const {
    std::vector<double> out(op_.n_out(), 0.0);
    for (std::size_t i : support()) {
        const auto& r = op_.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            out[j] += input_[i] * r[j];
        }
    }
    double total = 0.0;
    for (double x : out) {
        total += x;
    }
    for (double& x : out) {
        x /= total;
    }
    return out;
}

EntropyDelta computational_entropy_delta(const ContextualizedComputation& c) {
    EntropyDelta d;
    d.delta_h = quantum::shannon_entropy(c.output()) - quantum::shannon_entropy(c.input());
    d.min_delta_s_nc = std::max(0.0, -d.delta_h);
    return d;
}

bool check_traditional_theorem(const StochasticOp& op) {
    return (!is_entropy_ejecting(op)) == is_reversible(op);
}

bool check_generalized_theorem(const ContextualizedComputation& c) {
    require_deterministic(c.op(), "check_generalized_theorem");
    const bool non_ejecting = computational_entropy_delta(c).delta_h >= -tol::kProbability;
    return non_ejecting == is_reversible(c.op(), c.support());
}

double landauer_cost_oblivious_erasure(const linalg::RealMatrix& joint) {
    if (joint.size() == 0) {
        throw_contract("landauer_cost_oblivious_erasure", "joint distribution is empty");
    }
    std::vector<double> flat(static_cast<std::size_t>(joint.size()));
    std::vector<double> px(static_cast<std::size_t>(joint.rows()), 0.0);
    std::vector<double> py(static_cast<std::size_t>(joint.cols()), 0.0);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < joint.rows(); ++i) {
        for (Eigen::Index j = 0; j < joint.cols(); ++j) {
            flat[k++] = joint(i, j);
            px[static_cast<std::size_t>(i)] += joint(i, j);
            py[static_cast<std::size_t>(j)] += joint(i, j);
        }
    }
    quantum::validate_distribution(flat, "landauer_cost_oblivious_erasure");
    const double mi = quantum::shannon_entropy(px) + quantum::shannon_entropy(py) -
                      quantum::shannon_entropy(flat);
    return std::max(0.0, mi);
}

bool operator==(const BasisPartition& a, const BasisPartition& b) {
    return a.dim() == b.dim() && a.blocks() == b.blocks();
}

ImplementsReport implements_report(const linalg::ComplexMatrix& u, const BasisPartition& p_in,
                                   const BasisPartition& p_out, const StochasticOp& op,
                                   const QuantumContext& ctx, double tol) {
    if (p_in.dim() != p_out.dim() || u.rows() != u.cols() ||
        static_cast<std::size_t>(u.rows()) != p_in.dim()) {
        throw_shape("implements", "unitary and partitions must share one dimension");
    }
    if (!(ctx.partition() == p_in)) {
        throw_shape("implements", "context partition differs from the input partition");
    }
    if (op.n_in() != p_in.outcome_count() || op.n_out() != p_out.outcome_count()) {
        throw_shape("implements", "operation is " + std::to_string(op.n_in()) + "->" +
                                      std::to_string(op.n_out()) + " but partitions have " +
                                      std::to_string(p_in.outcome_count()) + "->" +
                                      std::to_string(p_out.outcome_count()) + " outcomes");
    }
    if (!linalg::is_unitary(u)) {
        throw_contract("implements", "operator is not unitary within tolerance");
    }
    ImplementsReport report;
    const std::vector<double> pc = computational_distribution(ctx);
    report.distances.resize(pc.size());
    for (std::size_t c = 0; c < pc.size(); ++c) {
        if (pc[c] <= tol::kProbability) {
            continue;
        }
        if (!op.has_row(c)) {
            throw_contract("implements", "outcome " + std::to_string(c) +
                                             " has positive probability but no row in the operation");
        }
        const QuantumContext restricted = restrict_context(ctx, c);
        const DensityMatrix evolved = quantum::evolve_unitary(restricted.state(), u);
        const std::vector<double> q = computational_distribution(evolved, p_out);
        const auto& r = op.row(c);
        double tv = 0.0;
        for (std::size_t j = 0; j < q.size(); ++j) {
            tv += std::abs(q[j] - r[j]);
        }
        tv *= 0.5;
        report.distances[c] = tv;
        report.max_distance = std::max(report.max_distance, tv);
        if (tv > tol) {
            report.implements = false;
        }
    }
    return report;
}

bool implements(const linalg::ComplexMatrix& u, const BasisPartition& p_in,
                const BasisPartition& p_out, const StochasticOp& op, const QuantumContext& ctx,
                double tol) {
    return implements_report(u, p_in, p_out, op, ctx, tol).implements;
}

} // namespace revtherm::comp
