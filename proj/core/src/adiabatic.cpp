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

#include "revtherm/adiabatic.hpp"

#include <cmath>
#include <string>

#include "revtherm/errors.hpp"

namespace revtherm::adiabatic {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw_contract("AdiabaticParams", std::string(name) + " must be finite and positive");
    }
}

void require_time(double t_tr, const char* where) {
    if (!std::isfinite(t_tr) || t_tr <= 0.0) {
        throw_contract(where, "transition time must be finite and positive");
    }
}

} // namespace

AdiabaticParams::AdiabaticParams(double e_sig, double tau_r, double tau_e, double c_sw, double c_lk)
    : e_sig_(e_sig), tau_r_(tau_r), tau_e_(tau_e), c_sw_(c_sw), c_lk_(c_lk) {
    require_positive(e_sig, "e_sig");
    require_positive(tau_r, "tau_r");
    require_positive(tau_e, "tau_e");
    require_positive(c_sw, "c_sw");
    require_positive(c_lk, "c_lk");
}

double e_sw(const AdiabaticParams& p, double t_tr) {
    require_time(t_tr, "e_sw");
    return p.e_sig() * p.tau_r_adj() / t_tr;
}

double e_lk(const AdiabaticParams& p, double t_tr) {
    require_time(t_tr, "e_lk");
    return p.e_sig() * t_tr / p.tau_e_adj();
}

double e_diss(const AdiabaticParams& p, double t_tr) {
    require_time(t_tr, "e_diss");
    return e_sw(p, t_tr) + e_lk(p, t_tr);
}

double optimal_ttr(const AdiabaticParams& p) {
    return std::sqrt(p.tau_r_adj() * p.tau_e_adj());
}

double min_e_diss(const AdiabaticParams& p) {
    return 2.0 * p.e_sig() * std::sqrt(p.tau_r_adj() / p.tau_e_adj());
}

bool outside_validity(const AdiabaticParams& p, double t_tr) {
    return !(t_tr > p.tau_r() && t_tr < p.tau_e());
}

EfficiencyBound efficiency_bound(const AdiabaticParams& p, double c) {
    if (!std::isfinite(c) || c < 0.0) {
        throw_contract("efficiency_bound", "c must be finite and non-negative");
    }
    EfficiencyBound b;
    b.value = 1.0 - c * std::sqrt(p.tau_r() / p.tau_e());
    b.weak_separation = p.tau_e() / p.tau_r() < 10.0;
    return b;
}

std::vector<SweepRow> sweep(const AdiabaticParams& p, double t_min, double t_max, std::size_t n_points) {
    require_time(t_min, "sweep");
    require_time(t_max, "sweep");
    if (n_points == 0) {
        throw_contract("sweep", "at least one point is required");
    }
    if (!(t_min < t_max) && !(t_min == t_max && n_points == 1)) {
        throw_contract("sweep", "t_min must be below t_max");
    }
    std::vector<SweepRow> rows;
    rows.reserve(n_points);
    const double lo = std::log(t_min);
    const double hi = std::log(t_max);
    for (std::size_t k = 0; k < n_points; ++k) {
        double t = t_min;
        if (n_points > 1) {
            t = k + 1 == n_points ? t_max
                                  : std::exp(lo + (hi - lo) * static_cast<double>(k) /
                                                      static_cast<double>(n_points - 1));
        }
        SweepRow r;
        r.t_tr = t;
        r.e_sw = e_sw(p, t);
        r.e_lk = e_lk(p, t);
        r.e_diss = r.e_sw + r.e_lk;
        rows.push_back(r);
    }
    return rows;
}

} // namespace revtherm::adiabatic
