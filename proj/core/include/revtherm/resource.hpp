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
#include <utility>
#include <vector>

#include "revtherm/qstate.hpp"

namespace revtherm::resource {

using quantum::DensityMatrix;
using quantum::ThermoContext;

/// Sort key used for beta-ordering.
///  - Ratio: p_i / exp(-beta E_i) = p_i * exp(+beta E_i). Segment slopes
///    decrease, so the curve is concave.
///  - Product: p_i * exp(-beta E_i). The curve need not be concave.
enum class OrderingConvention { Ratio, Product };

/// Permutation sorting the key nonincreasing; ties by ascending energy, then index.
std::vector<std::size_t> beta_order(const std::vector<double>& p, const std::vector<double>& energies,
                                    double beta,
                                    OrderingConvention convention = OrderingConvention::Ratio);

struct CurvePoint {
    double x = 0.0; ///< cumulative Boltzmann weight
    double y = 0.0; ///< cumulative probability
};

class ThermomajorizationCurve {
public:
    explicit ThermomajorizationCurve(std::vector<CurvePoint> points);

    const std::vector<CurvePoint>& points() const { return points_; }
    /// Partition function (x of the last point).
    double z() const { return points_.back().x; }
    /// Piecewise-linear interpolant; clamps to 1 beyond z().
    double evaluate(double x) const;
    bool is_concave(double tol = 1e-12) const;

private:
    std::vector<CurvePoint> points_;
};

ThermomajorizationCurve thermomaj_curve(const std::vector<double>& p,
                                        const std::vector<double>& energies, double beta,
                                        OrderingConvention convention = OrderingConvention::Ratio);

/// Out-curve <= in-curve + 1e-9 on all breakpoints plus `samples` uniform points.
bool thermomaj_feasible(const std::vector<double>& p_in, const std::vector<double>& p_out,
                        const std::vector<double>& energies, double beta,
                        OrderingConvention convention = OrderingConvention::Ratio,
                        std::size_t samples = 1000);

/// Energy-basis spectrum of a state commuting with the Hamiltonian: pairs
/// (energy, population). Throws ContractError for non-commuting input.
std::pair<std::vector<double>, std::vector<double>> energy_populations(const DensityMatrix& rho,
                                                                       const quantum::Hamiltonian& h);

bool thermomaj_feasible(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                        const ThermoContext& ctx,
                        OrderingConvention convention = OrderingConvention::Ratio,
                        std::size_t samples = 1000);

struct CtoVerdict {
    bool feasible = false;
    double free_energy_in = 0.0;
    double free_energy_out = 0.0;
    double qmi = 0.0;    ///< correlation budget charged to the transition
    double margin = 0.0; ///< free_energy_in - free_energy_out
};

/// Helmholtz comparison F(out) <= F(in) + 1e-9 with a caller-supplied QMI budget.
CtoVerdict cto_feasible_general(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                                const ThermoContext& ctx, double qmi_budget);

std::vector<double> default_alpha_grid();

struct AlphaMargin {
    double alpha = 0.0;
    double free_energy_in = 0.0;
    double free_energy_out = 0.0;
    double margin = 0.0; ///< F_alpha(in) - F_alpha(out)
};

struct SecondLawsResult {
    bool passed = true;
    std::vector<AlphaMargin> margins;
};

/// F_alpha(out) <= F_alpha(in) + 1e-9 for every alpha in the grid. Both states
/// must commute with the Hamiltonian.
SecondLawsResult second_laws_check(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                                   const ThermoContext& ctx,
                                   const std::vector<double>& alphas = default_alpha_grid());

struct CycleVerdict {
    bool feasible = false;
    CtoVerdict forward;  ///< reset -> computed
    CtoVerdict backward; ///< computed -> reset
    double qmi_total = 0.0;
    double margin = 0.0; ///< smaller of the two leg margins
};

/// Round trip reset -> computed -> reset as two chained general CTOs.
CycleVerdict compute_reset_cycle_verdict(const DensityMatrix& rho_reset,
                                         const DensityMatrix& rho_computed,
                                         const ThermoContext& ctx, double qmi_per_step);

} // namespace revtherm::resource
