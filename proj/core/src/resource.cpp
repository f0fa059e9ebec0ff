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

#include "revtherm/resource.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "revtherm/errors.hpp"
#include "revtherm/tolerances.hpp"

namespace revtherm::resource {

namespace {

void require_lengths(const std::vector<double>& p, const std::vector<double>& energies,
                     const char* where) {
    if (p.size() != energies.size()) {
        throw_shape(where, "probability vector has " + std::to_string(p.size()) +
                               " entries but there are " + std::to_string(energies.size()) +
                               " energies");
    }
}

void require_commuting(const DensityMatrix& rho, const quantum::Hamiltonian& h, const char* where) {
    if (rho.dim() != h.dim()) {
        throw_shape(where, "state and Hamiltonian dimensions differ");
    }
    const double gate =
        tol::kBlockStructure * std::max(1.0, linalg::hs_norm(rho.matrix()) * linalg::hs_norm(h.matrix()));
    if (linalg::hs_norm(linalg::commutator(rho.matrix(), h.matrix())) > gate) {
        throw_contract(where, "state does not commute with the Hamiltonian");
    }
}

} // namespace

std::vector<std::size_t> beta_order(const std::vector<double>& p, const std::vector<double>& energies,
                                    double beta, OrderingConvention convention) {
    require_lengths(p, energies, "beta_order");
    const double sign = convention == OrderingConvention::Ratio ? 1.0 : -1.0;
    std::vector<double> key(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        key[i] = p[i] > 0.0 ? std::log(p[i]) + sign * beta * energies[i]
                            : -std::numeric_limits<double>::infinity();
    }
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (key[a] != key[b]) {
            return key[a] > key[b];
        }
        if (energies[a] != energies[b]) {
            return energies[a] < energies[b];
        }
        return a < b;
    });
    return order;
}

ThermomajorizationCurve::ThermomajorizationCurve(std::vector<CurvePoint> points)
    : points_(std::move(points)) {
    if (points_.empty()) {
        throw_contract("ThermomajorizationCurve", "curve needs at least one point");
    }
}

double ThermomajorizationCurve::evaluate(double x) const {
    if (x <= points_.front().x) {
        return points_.front().y;
    }
    if (x >= points_.back().x) {
        return points_.back().y;
    }
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](double v, const CurvePoint& pt) { return v < pt.x; });
    const CurvePoint& hi = *it;
    const CurvePoint& lo = *(it - 1);
    const double dx = hi.x - lo.x;
    if (dx <= 0.0) {
        return hi.y;
    }
    return lo.y + (hi.y - lo.y) * (x - lo.x) / dx;
}

bool ThermomajorizationCurve::is_concave(double tol) const {
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < points_.size(); ++k) {
        const double dx = points_[k].x - points_[k - 1].x;
        if (dx <= 0.0) {
            continue;
        }
        const double slope = (points_[k].y - points_[k - 1].y) / dx;
        if (slope > previous + tol) {
            return false;
        }
        previous = slope;
    }
    return true;
}

ThermomajorizationCurve thermomaj_curve(const std::vector<double>& p,
                                        const std::vector<double>& energies, double beta,
                                        OrderingConvention convention) {
    require_lengths(p, energies, "thermomaj_curve");
    quantum::validate_distribution(p, "thermomaj_curve");
    const std::vector<std::size_t> order = beta_order(p, energies, beta, convention);
    std::vector<CurvePoint> pts;
    pts.reserve(p.size() + 1);
    pts.push_back({0.0, 0.0});
    double x = 0.0;
    double y = 0.0;
    for (std::size_t i : order) {
        x += std::exp(-beta * energies[i]);
        y += p[i];
        pts.push_back({x, y});
    }
    return ThermomajorizationCurve(std::move(pts));
}

bool thermomaj_feasible(const std::vector<double>& p_in, const std::vector<double>& p_out,
                        const std::vector<double>& energies, double beta,
                        OrderingConvention convention, std::size_t samples) {
    const ThermomajorizationCurve in = thermomaj_curve(p_in, energies, beta, convention);
    const ThermomajorizationCurve out = thermomaj_curve(p_out, energies, beta, convention);
    std::vector<double> xs;
    for (const auto& pt : in.points()) {
        xs.push_back(pt.x);
    }
    for (const auto& pt : out.points()) {
        xs.push_back(pt.x);
    }
    const double z = in.z();
    for (std::size_t k = 0; k <= samples; ++k) {
        xs.push_back(z * static_cast<double>(k) / static_cast<double>(std::max<std::size_t>(samples, 1)));
    }
    for (double x : xs) {
        if (out.evaluate(x) > in.evaluate(x) + tol::kFeasibility) {
            return false;
        }
    }
    return true;
}

std::pair<std::vector<double>, std::vector<double>> energy_populations(const DensityMatrix& rho,
                                                                       const quantum::Hamiltonian& h) {
    require_commuting(rho, h, "energy_populations");
    const auto& e = h.energies();
    const auto& v = h.eigenvectors();
    const double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
    std::vector<double> energies;
    std::vector<double> pops;
    Eigen::Index start = 0;
    while (start < e.size()) {
        Eigen::Index end = start + 1;
        while (end < e.size() && e(end) - e(start) <= tol::kHermitian * scale) {
            ++end;
        }
        const linalg::ComplexMatrix vg = v.middleCols(start, end - start);
        const linalg::ComplexMatrix sub = linalg::hermitian_part(vg.adjoint() * rho.matrix() * vg);
        const linalg::RealVector w = linalg::eig_hermitian(sub).values;
        for (Eigen::Index k = 0; k < w.size(); ++k) {
            energies.push_back(e(start + k));
            pops.push_back(std::max(0.0, w(k)));
        }
        start = end;
    }
    const double total = std::accumulate(pops.begin(), pops.end(), 0.0);
    for (double& x : pops) {
        x /= total;
    }
    return {energies, pops};
}

bool thermomaj_feasible(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                        const ThermoContext& ctx, OrderingConvention convention,
                        std::size_t samples) {
    const auto in = energy_populations(rho_in, ctx.hamiltonian());
    const auto out = energy_populations(rho_out, ctx.hamiltonian());
    // Both spectra share the Hamiltonian's energies, but degenerate blocks may
    // pair populations with energies in a different order; within a block the
    // energies are equal, so the curves are unaffected.
    return thermomaj_feasible(in.second, out.second, in.first, ctx.beta(), convention, samples);
}

CtoVerdict cto_feasible_general(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                                const ThermoContext& ctx, double qmi_budget) {
    if (!std::isfinite(qmi_budget) || qmi_budget < 0.0) {
        throw_contract("cto_feasible_general", "QMI budget must be finite and non-negative");
    }
    CtoVerdict v;
    v.free_energy_in = quantum::helmholtz_free_energy(rho_in, ctx);
    v.free_energy_out = quantum::helmholtz_free_energy(rho_out, ctx);
    v.qmi = qmi_budget;
    v.margin = v.free_energy_in - v.free_energy_out;
    v.feasible = v.free_energy_out <= v.free_energy_in + tol::kFeasibility;
    return v;
}

std::vector<double> default_alpha_grid() {
    return {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 50.0};
}

SecondLawsResult second_laws_check(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                                   const ThermoContext& ctx, const std::vector<double>& alphas) {
    require_commuting(rho_in, ctx.hamiltonian(), "second_laws_check");
    require_commuting(rho_out, ctx.hamiltonian(), "second_laws_check");
    SecondLawsResult r;
    for (double a : alphas) {
        AlphaMargin m;
        m.alpha = a;
        m.free_energy_in = quantum::alpha_free_energy(rho_in, ctx, a);
        m.free_energy_out = quantum::alpha_free_energy(rho_out, ctx, a);
        if (m.free_energy_in == m.free_energy_out) {
            m.margin = 0.0;
        } else {
            m.margin = m.free_energy_in - m.free_energy_out;
        }
        if (!(m.margin >= -tol::kFeasibility)) {
            r.passed = false;
        }
        r.margins.push_back(m);
    }
    return r;
}

CycleVerdict compute_reset_cycle_verdict(const DensityMatrix& rho_reset,
                                         const DensityMatrix& rho_computed,
                                         const ThermoContext& ctx, double qmi_per_step) {
    CycleVerdict c;
    c.forward = cto_feasible_general(rho_reset, rho_computed, ctx, qmi_per_step);
    c.backward = cto_feasible_general(rho_computed, rho_reset, ctx, qmi_per_step);
    c.feasible = c.forward.feasible && c.backward.feasible;
    c.qmi_total = 2.0 * qmi_per_step;
    c.margin = std::min(c.forward.margin, c.backward.margin);
    return c;
}

} // namespace revtherm::resource
