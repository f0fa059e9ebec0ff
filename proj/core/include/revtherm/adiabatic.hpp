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

namespace revtherm::adiabatic {

/// Switching/leakage dissipation model. Units are whatever the caller uses.
class AdiabaticParams {
public:
    /// Throws ContractError unless every value is finite and strictly positive.
    AdiabaticParams(double e_sig, double tau_r, double tau_e, double c_sw = 1.0, double c_lk = 1.0);

    double e_sig() const { return e_sig_; }
    double tau_r() const { return tau_r_; }
    double tau_e() const { return tau_e_; }
    double c_sw() const { return c_sw_; }
    double c_lk() const { return c_lk_; }
    /// c_sw * tau_r
    double tau_r_adj() const { return c_sw_ * tau_r_; }
    /// tau_e / c_lk
    double tau_e_adj() const { return tau_e_ / c_lk_; }
    /// tau_r' < tau_e'
    bool asymptotic_regime() const { return tau_r_adj() < tau_e_adj(); }

private:
    double e_sig_;
    double tau_r_;
    double tau_e_;
    double c_sw_;
    double c_lk_;
};

double e_sw(const AdiabaticParams& p, double t_tr);
double e_lk(const AdiabaticParams& p, double t_tr);
/// E_sig (tau_r' / t_tr + t_tr / tau_e'). Throws ContractError for t_tr <= 0.
double e_diss(const AdiabaticParams& p, double t_tr);
/// sqrt(tau_r' tau_e')
double optimal_ttr(const AdiabaticParams& p);
/// 2 E_sig sqrt(tau_r' / tau_e')
double min_e_diss(const AdiabaticParams& p);
/// True when t_tr lies outside (tau_r, tau_e), where the model is only indicative.
bool outside_validity(const AdiabaticParams& p, double t_tr);

struct EfficiencyBound {
    double value = 0.0;          ///< 1 - c sqrt(tau_r / tau_e)
    bool weak_separation = false; ///< tau_e / tau_r < 10
};

EfficiencyBound efficiency_bound(const AdiabaticParams& p, double c);

struct SweepRow {
    double t_tr = 0.0;
    double e_sw = 0.0;
    double e_lk = 0.0;
    double e_diss = 0.0;
};

/// Log-spaced grid from t_min to t_max inclusive. Throws ContractError unless
/// 0 < t_min < t_max (or t_min == t_max with n_points == 1) and n_points >= 1.
std::vector<SweepRow> sweep(const AdiabaticParams& p, double t_min, double t_max, std::size_t n_points);

} // namespace revtherm::adiabatic
