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

#include "revtherm/qstate.hpp"

namespace revtherm::channels {

using linalg::ComplexMatrix;
using quantum::DensityMatrix;
using quantum::ThermoContext;

/// Unitary on S (x) E together with the initial environment state.
class DilationSpec {
public:
    /// Throws ShapeError on dimension mismatch and ContractError for a non-unitary u.
    DilationSpec(std::size_t d_s, std::size_t d_e, ComplexMatrix u, DensityMatrix env_state);

    std::size_t d_s() const { return d_s_; }
    std::size_t d_e() const { return d_e_; }
    const ComplexMatrix& unitary() const { return u_; }
    const DensityMatrix& env_state() const { return env_; }

private:
    std::size_t d_s_;
    std::size_t d_e_;
    ComplexMatrix u_;
    DensityMatrix env_;
};

/// Equal-shaped operators with sum M^dag M = I within 1e-9.
class KrausSet {
public:
    explicit KrausSet(std::vector<ComplexMatrix> ops);

    const std::vector<ComplexMatrix>& operators() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    std::size_t dim_in() const { return static_cast<std::size_t>(ops_.front().cols()); }
    std::size_t dim_out() const { return static_cast<std::size_t>(ops_.front().rows()); }
    /// ||sum M^dag M - I||_HS.
    double completeness_residual() const;

private:
    std::vector<ComplexMatrix> ops_;
};

/// U (rho_S (x) rho_E) U^dag.
DensityMatrix joint_final_state(const DilationSpec& spec, const DensityMatrix& rho_s);
/// Tr_E of the joint final state.
DensityMatrix apply_dilation(const DilationSpec& spec, const DensityMatrix& rho_s);

/// M_ab = sqrt(e_a) <v_b| U |e_a> over the environment eigenbasis |e_a>.
/// `output_basis` columns are the |v_b>; the computational basis by default.
KrausSet extract_system_kraus(const DilationSpec& spec,
                              const std::optional<ComplexMatrix>& output_basis = std::nullopt);
/// N_cd = sqrt(s_c) <w_d| U |s_c> over the system eigenbasis |s_c>.
KrausSet extract_env_kraus(const ComplexMatrix& u, const DensityMatrix& rho_s, std::size_t d_s,
                           std::size_t d_e,
                           const std::optional<ComplexMatrix>& output_basis = std::nullopt);

/// sum M rho M^dag.
DensityMatrix apply_kraus(const KrausSet& k, const DensityMatrix& rho);

/// ||sum M M^dag - I||_HS.
double non_unitality(const KrausSet& k);

/// -T (S(rho_out) - S(rho_in)).
double conditional_landauer_bound(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                                  double temperature);

enum class ResetMode { Conditional, Unconditional };

struct WeightedState {
    double probability = 0.0;
    DensityMatrix state;
};

class ResetScenario {
public:
    /// Conditional mode takes one unitary per state, unconditional mode one
    /// shared unitary. Unitaries act on system (x) environment.
    ResetScenario(std::vector<WeightedState> states, DensityMatrix target, ThermoContext env,
                  ResetMode mode, std::vector<ComplexMatrix> unitaries);

    const std::vector<WeightedState>& states() const { return states_; }
    const DensityMatrix& target() const { return target_; }
    const ThermoContext& env() const { return env_; }
    ResetMode mode() const { return mode_; }
    const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }
    const ComplexMatrix& unitary_for(std::size_t l) const;
    std::size_t d_s() const { return target_.dim(); }
    std::size_t d_e() const { return env_.dim(); }
    std::vector<double> probabilities() const;

private:
    std::vector<WeightedState> states_;
    DensityMatrix target_;
    ThermoContext env_;
    ResetMode mode_;
    std::vector<ComplexMatrix> unitaries_;
};

/// -T (sum_l p_l dS_l - H(p)) with dS_l = S(target) - S(rho_l).
double unconditional_landauer_bound(const ResetScenario& scenario, double temperature);

struct ResetReport {
    std::vector<double> delta_energy;  ///< environment energy increase per state
    double average_delta_energy = 0.0;
    double bound = 0.0;
    bool satisfied = false;            ///< average >= bound - 1e-9
    double target_residual = 0.0;      ///< max trace distance of system finals to the target
    bool reached_target = false;       ///< target_residual <= 1e-8
    double information_erased = 0.0;   ///< H(p) for unconditional resets, 0 otherwise
};

/// Explicit joint evolution with the environment starting in its Gibbs state.
/// Conditional mode throws ContractError if the global final states differ by
/// more than 1e-8.
ResetReport simulate_reset(const ResetScenario& scenario);

/// sum Tr[N N^dag tau_E].
double heat_mgf(const KrausSet& env_kraus, const DensityMatrix& tau_e);
/// Tr_S[Tr_E[U^dag (I (x) tau_E) U] rho_S].
double heat_mgf_system(const ComplexMatrix& u, const DensityMatrix& rho_s, const DensityMatrix& tau_e);
/// -T ln(mgf).
double jensen_bound(double mgf, double temperature);

struct HeatDecomposition {
    double delta_entropy_system = 0.0;  ///< S(rho_S') - S(rho_S)
    double mutual_information = 0.0;    ///< I(S:E) of the final joint state
    double relative_entropy_env = 0.0;  ///< S(rho_E' || tau_E)
    double beta_heat = 0.0;             ///< beta (Tr[H_E rho_E'] - Tr[H_E tau_E])
    double residual = 0.0;              ///< beta_heat - (-dS_S + I + D)
};

/// Requires the dilation's environment state to be the Gibbs state of `env`.
HeatDecomposition heat_decomposition(const DilationSpec& spec, const DensityMatrix& rho_s,
                                     const ThermoContext& env);

struct PartoviResult {
    double value = 0.0; ///< Delta(S_E - beta U_E)
    bool holds = false; ///< value <= 1e-9
};

PartoviResult partovi_check(const DilationSpec& spec, const DensityMatrix& rho_s,
                            const ThermoContext& env);

/// SWAP on C^d (x) C^d.
ComplexMatrix swap_unitary(std::size_t d);
/// P (x) I_E with P|i> = |perm[i]>.
ComplexMatrix system_permutation_unitary(const std::vector<std::size_t>& perm, std::size_t d_e);

} // namespace revtherm::channels
