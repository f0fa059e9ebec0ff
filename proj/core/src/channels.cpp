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

#include "revtherm/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "revtherm/errors.hpp"
#include "revtherm/tolerances.hpp"

namespace revtherm::channels {

using linalg::Complex;
using linalg::Subsystem;

namespace {

// Vanishing operators contribute nothing to the channel and are dropped.
void push_nonzero(std::vector<ComplexMatrix>& ops, ComplexMatrix m) {
    if (m.norm() > tol::kSupport) {
        ops.push_back(std::move(m));
    }
}

constexpr double kTargetReached = 1e-8;
constexpr double kConditionalCoincide = 1e-8;
constexpr double kGibbsMatch = 1e-9;

ComplexMatrix basis_or_identity(const std::optional<ComplexMatrix>& basis, std::size_t d,
                                const char* where) {
    if (!basis) {
        return linalg::identity(d);
    }
    if (static_cast<std::size_t>(basis->rows()) != d || !linalg::is_unitary(*basis)) {
        throw_contract(where, "output basis must be a unitary of matching dimension");
    }
    return *basis;
}

void require_gibbs(const DensityMatrix& env_state, const ThermoContext& env, const char* where) {
    if (env_state.dim() != env.dim()) {
        throw_shape(where, "environment dimensions differ");
    }
    if (quantum::trace_distance(env_state, quantum::gibbs_state(env)) > kGibbsMatch) {
        throw_contract(where, "environment state is not the Gibbs state of the environment context");
    }
}

} // namespace

DilationSpec::DilationSpec(std::size_t d_s, std::size_t d_e, ComplexMatrix u, DensityMatrix env_state)
    : d_s_(d_s), d_e_(d_e), u_(std::move(u)), env_(std::move(env_state)) {
    const auto n = static_cast<Eigen::Index>(d_s_ * d_e_);
    if (d_s_ == 0 || d_e_ == 0 || u_.rows() != n || u_.cols() != n || env_.dim() != d_e_) {
        throw_shape("DilationSpec", "unitary or environment state does not match (d_S, d_E) = (" +
                                        std::to_string(d_s_) + "," + std::to_string(d_e_) + ")");
    }
    if (!linalg::is_unitary(u_)) {
        throw_contract("DilationSpec", "joint operator is not unitary within tolerance");
    }
}

KrausSet::KrausSet(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw_contract("KrausSet", "at least one operator is required");
    }
    for (const auto& m : ops_) {
        if (m.rows() != ops_.front().rows() || m.cols() != ops_.front().cols()) {
            throw_shape("KrausSet", "operators must share one shape");
        }
        if (!linalg::all_finite(m)) {
            throw_contract("KrausSet", "operators must be finite");
        }
    }
    if (completeness_residual() > tol::kKraus) {
        throw_contract("KrausSet", "completeness residual " + std::to_string(completeness_residual()) +
                                       " exceeds tolerance");
    }
}

double KrausSet::completeness_residual() const {
    const auto d = static_cast<Eigen::Index>(dim_in());
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (const auto& m : ops_) {
        s += m.adjoint() * m;
    }
    return linalg::hs_norm(s - ComplexMatrix::Identity(d, d));
}

DensityMatrix joint_final_state(const DilationSpec& spec, const DensityMatrix& rho_s) {
    if (rho_s.dim() != spec.d_s()) {
        throw_shape("joint_final_state", "system state does not match d_S");
    }
    const ComplexMatrix joint = linalg::tensor(rho_s.matrix(), spec.env_state().matrix());
    return DensityMatrix(spec.unitary() * joint * spec.unitary().adjoint());
}

DensityMatrix apply_dilation(const DilationSpec& spec, const DensityMatrix& rho_s) {
    return quantum::partial_trace(joint_final_state(spec, rho_s), spec.d_s(), spec.d_e(), Subsystem::A);
}

KrausSet extract_system_kraus(const DilationSpec& spec, const std::optional<ComplexMatrix>& output_basis) {
    const auto ds = static_cast<Eigen::Index>(spec.d_s());
    const auto de = static_cast<Eigen::Index>(spec.d_e());
    const ComplexMatrix v = basis_or_identity(output_basis, spec.d_e(), "extract_system_kraus");
    const auto& e = spec.env_state().eigenvalues();
    const auto& evec = spec.env_state().eigenvectors();
    const ComplexMatrix id_s = ComplexMatrix::Identity(ds, ds);
    std::vector<ComplexMatrix> ops;
    for (Eigen::Index a = 0; a < de; ++a) {
        if (e(a) <= tol::kSupport) {
            continue;
        }
        const ComplexMatrix in = linalg::tensor(id_s, evec.col(a));
        for (Eigen::Index b = 0; b < de; ++b) {
            const ComplexMatrix out = linalg::tensor(id_s, v.col(b).adjoint());
            push_nonzero(ops, std::sqrt(e(a)) * out * spec.unitary() * in);
        }
    }
    return KrausSet(std::move(ops));
}

KrausSet extract_env_kraus(const ComplexMatrix& u, const DensityMatrix& rho_s, std::size_t d_s,
                           std::size_t d_e, const std::optional<ComplexMatrix>& output_basis) {
    const auto ds = static_cast<Eigen::Index>(d_s);
    const auto de = static_cast<Eigen::Index>(d_e);
    if (rho_s.dim() != d_s || u.rows() != ds * de || u.cols() != ds * de) {
        throw_shape("extract_env_kraus", "operands do not match (d_S, d_E)");
    }
    if (!linalg::is_unitary(u)) {
        throw_contract("extract_env_kraus", "joint operator is not unitary within tolerance");
    }
    const ComplexMatrix w = basis_or_identity(output_basis, d_s, "extract_env_kraus");
    const auto& s = rho_s.eigenvalues();
    const auto& svec = rho_s.eigenvectors();
    const ComplexMatrix id_e = ComplexMatrix::Identity(de, de);
    std::vector<ComplexMatrix> ops;
    for (Eigen::Index c = 0; c < ds; ++c) {
        if (s(c) <= tol::kSupport) {
            continue;
        }
        const ComplexMatrix in = linalg::tensor(svec.col(c), id_e);
        for (Eigen::Index d = 0; d < ds; ++d) {
            const ComplexMatrix out = linalg::tensor(w.col(d).adjoint(), id_e);
            push_nonzero(ops, std::sqrt(s(c)) * out * u * in);
        }
    }
    return KrausSet(std::move(ops));
}

DensityMatrix apply_kraus(const KrausSet& k, const DensityMatrix& rho) {
    if (rho.dim() != k.dim_in()) {
        throw_shape("apply_kraus", "state does not match the Kraus input dimension");
    }
    const auto d = static_cast<Eigen::Index>(k.dim_out());
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (const auto& m : k.operators()) {
        out += m * rho.matrix() * m.adjoint();
    }
    return DensityMatrix(out);
}

double non_unitality(const KrausSet& k) {
    if (k.dim_in() != k.dim_out()) {
        throw_shape("non_unitality", "Kraus operators must be square");
    }
    const auto d = static_cast<Eigen::Index>(k.dim_out());
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (const auto& m : k.operators()) {
        s += m * m.adjoint();
    }
    return linalg::hs_norm(s - ComplexMatrix::Identity(d, d));
}

double conditional_landauer_bound(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                                  double temperature) {
    return -temperature * (quantum::von_neumann_entropy(rho_out) - quantum::von_neumann_entropy(rho_in));
}

ResetScenario::ResetScenario(std::vector<WeightedState> states, DensityMatrix target,
                             ThermoContext env, ResetMode mode, std::vector<ComplexMatrix> unitaries)
    : states_(std::move(states)),
      target_(std::move(target)),
      env_(std::move(env)),
      mode_(mode),
      unitaries_(std::move(unitaries)) {
    if (states_.empty()) {
        throw_contract("ResetScenario", "at least one initial state is required");
    }
    quantum::validate_distribution(probabilities(), "ResetScenario");
    for (const auto& s : states_) {
        if (s.state.dim() != target_.dim()) {
            throw_shape("ResetScenario", "initial states and target must share a dimension");
        }
    }
    const std::size_t expected = mode_ == ResetMode::Conditional ? states_.size() : 1;
    if (unitaries_.size() != expected) {
        throw_shape("ResetScenario", "expected " + std::to_string(expected) + " unitaries, got " +
                                         std::to_string(unitaries_.size()));
    }
    const auto n = static_cast<Eigen::Index>(d_s() * d_e());
    for (const auto& u : unitaries_) {
        if (u.rows() != n || u.cols() != n) {
            throw_shape("ResetScenario", "unitary does not act on system (x) environment");
        }
        if (!linalg::is_unitary(u)) {
            throw_contract("ResetScenario", "reset operator is not unitary within tolerance");
        }
    }
}

const ComplexMatrix& ResetScenario::unitary_for(std::size_t l) const {
    return mode_ == ResetMode::Conditional ? unitaries_.at(l) : unitaries_.front();
}

std::vector<double> ResetScenario::probabilities() const {
    std::vector<double> p;
    p.reserve(states_.size());
    for (const auto& s : states_) {
        p.push_back(s.probability);
    }
    return p;
}

double unconditional_landauer_bound(const ResetScenario& scenario, double temperature) {
    double mean_ds = 0.0;
    const double s_target = quantum::von_neumann_entropy(scenario.target());
    for (const auto& s : scenario.states()) {
        mean_ds += s.probability * (s_target - quantum::von_neumann_entropy(s.state));
    }
    const double erased = quantum::shannon_entropy(scenario.probabilities());
    return -temperature * (mean_ds - erased);
}

ResetReport simulate_reset(const ResetScenario& scenario) {
    const ThermoContext& env = scenario.env();
    const double t = env.temperature();
    const DensityMatrix tau = quantum::gibbs_state(env);
    const ComplexMatrix& h_e = env.hamiltonian().matrix();
    const double e0 = quantum::expectation(tau, h_e);

    ResetReport r;
    std::optional<ComplexMatrix> first_final;
    double conditional_bound = 0.0;
    for (std::size_t l = 0; l < scenario.states().size(); ++l) {
        const auto& ws = scenario.states()[l];
        const ComplexMatrix& u = scenario.unitary_for(l);
        const DensityMatrix joint(u * linalg::tensor(ws.state.matrix(), tau.matrix()) * u.adjoint());
        const DensityMatrix env_final =
            quantum::partial_trace(joint, scenario.d_s(), scenario.d_e(), Subsystem::B);
        const DensityMatrix sys_final =
            quantum::partial_trace(joint, scenario.d_s(), scenario.d_e(), Subsystem::A);
        r.delta_energy.push_back(quantum::expectation(env_final, h_e) - e0);
        r.average_delta_energy += ws.probability * r.delta_energy.back();
        r.target_residual = std::max(r.target_residual, quantum::trace_distance(sys_final, scenario.target()));
        conditional_bound += ws.probability * conditional_landauer_bound(ws.state, scenario.target(), t);

        if (scenario.mode() == ResetMode::Conditional) {
            if (!first_final) {
                first_final = joint.matrix();
            } else if (linalg::hs_norm(joint.matrix() - *first_final) > kConditionalCoincide) {
                throw_contract("simulate_reset",
                               "conditional resets do not reach a common global final state");
            }
        }
    }
    if (scenario.mode() == ResetMode::Conditional) {
        r.bound = conditional_bound;
    } else {
        r.information_erased = quantum::shannon_entropy(scenario.probabilities());
        r.bound = unconditional_landauer_bound(scenario, t);
    }
    r.satisfied = r.average_delta_energy >= r.bound - tol::kFeasibility;
    r.reached_target = r.target_residual <= kTargetReached;
    return r;
}

double heat_mgf(const KrausSet& env_kraus, const DensityMatrix& tau_e) {
    if (env_kraus.dim_out() != tau_e.dim() || env_kraus.dim_in() != tau_e.dim()) {
        throw_shape("heat_mgf", "Kraus operators do not act on the environment");
    }
    double s = 0.0;
    for (const auto& n : env_kraus.operators()) {
        s += (n * n.adjoint() * tau_e.matrix()).trace().real();
    }
    return s;
}

double heat_mgf_system(const ComplexMatrix& u, const DensityMatrix& rho_s, const DensityMatrix& tau_e) {
    const std::size_t ds = rho_s.dim();
    const std::size_t de = tau_e.dim();
    if (static_cast<std::size_t>(u.rows()) != ds * de) {
        throw_shape("heat_mgf_system", "unitary does not act on system (x) environment");
    }
    const ComplexMatrix lifted = u.adjoint() * linalg::tensor(linalg::identity(ds), tau_e.matrix()) * u;
    const ComplexMatrix reduced = linalg::partial_trace(lifted, ds, de, Subsystem::A);
    return (reduced * rho_s.matrix()).trace().real();
}

double jensen_bound(double mgf, double temperature) {
    if (!(mgf > 0.0)) {
        throw_contract("jensen_bound", "moment-generating function must be positive");
    }
    return -temperature * std::log(mgf);
}

HeatDecomposition heat_decomposition(const DilationSpec& spec, const DensityMatrix& rho_s,
                                     const ThermoContext& env) {
    require_gibbs(spec.env_state(), env, "heat_decomposition");
    const DensityMatrix joint = joint_final_state(spec, rho_s);
    const DensityMatrix sys_final = quantum::partial_trace(joint, spec.d_s(), spec.d_e(), Subsystem::A);
    const DensityMatrix env_final = quantum::partial_trace(joint, spec.d_s(), spec.d_e(), Subsystem::B);
    const ComplexMatrix& h_e = env.hamiltonian().matrix();

    HeatDecomposition h;
    h.delta_entropy_system = quantum::von_neumann_entropy(sys_final) - quantum::von_neumann_entropy(rho_s);
    h.mutual_information = quantum::quantum_mutual_information(joint, spec.d_s(), spec.d_e());
    h.relative_entropy_env = quantum::relative_entropy_to_gibbs(env_final, env);
    h.beta_heat = env.beta() * (quantum::expectation(env_final, h_e) -
                                quantum::expectation(spec.env_state(), h_e));
    h.residual = h.beta_heat - (-h.delta_entropy_system + h.mutual_information + h.relative_entropy_env);
    return h;
}

PartoviResult partovi_check(const DilationSpec& spec, const DensityMatrix& rho_s, const ThermoContext& env) {
    require_gibbs(spec.env_state(), env, "partovi_check");
    const DensityMatrix env_final = quantum::partial_trace(joint_final_state(spec, rho_s), spec.d_s(),
                                                           spec.d_e(), Subsystem::B);
    const ComplexMatrix& h_e = env.hamiltonian().matrix();
    const double ds = quantum::von_neumann_entropy(env_final) - quantum::von_neumann_entropy(spec.env_state());
    const double du = quantum::expectation(env_final, h_e) - quantum::expectation(spec.env_state(), h_e);
    PartoviResult r;
    r.value = ds - env.beta() * du;
    r.holds = r.value <= tol::kFeasibility;
    return r;
}

ComplexMatrix swap_unitary(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix s = ComplexMatrix::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            s(j * n + i, i * n + j) = 1.0;
        }
    }
    return s;
}

ComplexMatrix system_permutation_unitary(const std::vector<std::size_t>& perm, std::size_t d_e) {
    const auto n = static_cast<Eigen::Index>(perm.size());
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || seen[perm[i]]) {
            throw_contract("system_permutation_unitary", "not a permutation");
        }
        seen[perm[i]] = true;
        p(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return linalg::tensor(p, linalg::identity(d_e));
}

} // namespace revtherm::channels
