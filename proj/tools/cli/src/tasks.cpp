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

#include "revtherm/cli/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "revtherm/adiabatic.hpp"
#include "revtherm/channels.hpp"
#include "revtherm/cli/csv.hpp"
#include "revtherm/compmodel.hpp"
#include "revtherm/compops.hpp"
#include "revtherm/gksl.hpp"
#include "revtherm/resource.hpp"
#include "revtherm/tolerances.hpp"

namespace revtherm::cli {

namespace {

using linalg::ComplexMatrix;
using quantum::DensityMatrix;
using quantum::ThermoContext;

struct TaskOutput {
    Json outputs = Json::object();
    Json checks = Json::object();
    Json tolerances = Json::object();
    std::vector<std::pair<std::string, CsvTable>> tables;
};

struct Runner {
    const RunOptions& options;
    double entropy_scale;

    Json ent(double x) const { return number(x * entropy_scale); }
    double tol_or(double fallback) const { return options.tol.value_or(fallback); }
};

void allow_keys(const Node& n, std::initializer_list<const char*> keys) {
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& item : n.require_object().items()) {
        if (allowed.count(item.key()) == 0) {
            n.field(item.key()).fail("unknown field");
        }
    }
}

Json encode_indices(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (std::size_t i : v) {
        out.push_back(i);
    }
    return out;
}

ThermoContext parse_thermo(const Node& p) {
    const bool has_e = p.has("energies");
    const bool has_h = p.has("hamiltonian");
    if (has_e == has_h) {
        p.fail("exactly one of 'energies' or 'hamiltonian' is required");
    }
    const double beta = p.field("beta").as_positive();
    if (has_e) {
        const Node e = p.field("energies");
        const std::vector<double> energies = e.as_real_vector();
        if (energies.empty()) {
            e.fail("expected at least one energy");
        }
        return ThermoContext(quantum::Hamiltonian::diagonal(energies), beta);
    }
    return ThermoContext(as_hamiltonian(p.field("hamiltonian")), beta);
}

comp::BasisPartition parse_partition(const Node& dim, const Node& blocks) {
    const std::size_t d = dim.as_index();
    if (d == 0) {
        dim.fail("dimension must be positive");
    }
    auto lists = blocks.as_index_lists();
    return at_path(blocks.path(), [&] { return comp::BasisPartition(d, std::move(lists)); });
}

comp::StochasticOp parse_op(const Node& n) {
    allow_keys(n, {"n_out", "rows", "map"});
    const std::size_t n_out = n.field("n_out").as_index();
    const bool has_rows = n.has("rows");
    const bool has_map = n.has("map");
    if (has_rows == has_map) {
        n.fail("exactly one of 'rows' or 'map' is required");
    }
    if (has_map) {
        const Node m = n.field("map");
        std::vector<std::optional<std::size_t>> map;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const Node e = m.at(i);
            map.push_back(e.value().is_null() ? std::nullopt : std::optional<std::size_t>(e.as_index()));
        }
        return at_path(m.path(), [&] { return comp::StochasticOp::deterministic(n_out, map); });
    }
    const Node r = n.field("rows");
    std::vector<comp::StochasticOp::Row> rows;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Node e = r.at(i);
        rows.push_back(e.value().is_null() ? std::nullopt
                                           : std::optional<std::vector<double>>(e.as_real_vector()));
    }
    const std::size_t n_in = rows.size();
    return at_path(r.path(), [&] { return comp::StochasticOp(n_in, n_out, std::move(rows)); });
}

gksl::Lindbladian parse_lindbladian(const Node& p) {
    quantum::Hamiltonian h = as_hamiltonian(p.field("hamiltonian"));
    std::vector<gksl::Jump> jumps;
    if (auto j = p.optional_field("jumps")) {
        for (std::size_t i = 0; i < j->size(); ++i) {
            const Node e = j->at(i);
            allow_keys(e, {"op", "rate"});
            gksl::Jump jump;
            jump.op = e.field("op").as_square_matrix(h.dim());
            jump.rate = e.field("rate").as_non_negative();
            jumps.push_back(std::move(jump));
        }
    }
    return at_path(p.path(), [&] { return gksl::Lindbladian(std::move(h), std::move(jumps)); });
}

resource::OrderingConvention parse_ordering(const Node& p) {
    const auto o = p.optional_field("ordering");
    if (!o) {
        return resource::OrderingConvention::Ratio;
    }
    const std::string s = o->as_string();
    if (s == "ratio") {
        return resource::OrderingConvention::Ratio;
    }
    if (s == "product") {
        return resource::OrderingConvention::Product;
    }
    o->fail("expected 'ratio' or 'product'");
}

Json encode_curve(const resource::ThermomajorizationCurve& c) {
    Json out = Json::array();
    for (const auto& pt : c.points()) {
        out.push_back(Json::array({number(pt.x), number(pt.y)}));
    }
    return out;
}

CsvTable curve_table(const resource::ThermomajorizationCurve& c) {
    CsvTable t{{"x", "y"}, {}};
    for (const auto& pt : c.points()) {
        t.rows.push_back({pt.x, pt.y});
    }
    return t;
}

// ---------------------------------------------------------------------------

TaskOutput run_classify(const Node& p, const Runner& r) {
    allow_keys(p, {"op", "subset", "input", "joint"});
    const comp::StochasticOp op = parse_op(p.field("op"));
    std::optional<comp::IndexSet> subset;
    if (auto s = p.optional_field("subset")) {
        subset = s->as_index_vector();
        for (std::size_t i = 0; i < subset->size(); ++i) {
            if (!op.has_row((*subset)[i])) {
                s->at(i).fail("state is outside the operation's domain");
            }
        }
    }
    std::optional<comp::ContextualizedComputation> cc;
    if (auto in = p.optional_field("input")) {
        std::vector<double> dist = in->as_real_vector();
        cc.emplace(at_path(in->path(), [&] { return comp::ContextualizedComputation(op, std::move(dist)); }));
    }
    std::optional<linalg::RealMatrix> joint;
    if (auto j = p.optional_field("joint")) {
        joint = j->as_real_matrix();
        std::vector<double> flat(joint->data(), joint->data() + joint->size());
        at_path(j->path(), [&] { quantum::validate_distribution(flat, "joint"); });
    }

    TaskOutput t;
    const bool det = comp::is_deterministic(op);
    t.outputs["n_in"] = op.n_in();
    t.outputs["n_out"] = op.n_out();
    t.outputs["domain"] = encode_indices(op.domain());
    t.outputs["deterministic"] = det;
    t.outputs["reversible"] = comp::is_reversible(op);
    t.outputs["entropy_ejecting"] = det ? Json(comp::is_entropy_ejecting(op)) : Json(nullptr);
    if (subset) {
        t.outputs["conditionally_reversible"] = comp::is_reversible(op, subset);
    }
    if (det) {
        t.checks["traditional_theorem"] = comp::check_traditional_theorem(op);
    }
    if (cc) {
        const comp::EntropyDelta d = comp::computational_entropy_delta(*cc);
        Json in;
        in["support"] = encode_indices(cc->support());
        in["output"] = encode_real_vector(cc->output());
        in["delta_h"] = r.ent(d.delta_h);
        in["min_delta_s_nc"] = r.ent(d.min_delta_s_nc);
        in["reversible_on_support"] = comp::is_reversible(op, cc->support());
        t.outputs["input"] = in;
        if (det) {
            t.checks["generalized_theorem"] = comp::check_generalized_theorem(*cc);
        }
    }
    if (joint) {
        t.outputs["oblivious_erasure_cost"] = r.ent(comp::landauer_cost_oblivious_erasure(*joint));
    }
    t.tolerances["probability"] = tol::kProbability;
    t.tolerances["stochastic_row"] = tol::kStochasticRow;
    t.tolerances["entropy_delta"] = 1e-12;
    return t;
}

TaskOutput run_entropy_decompose(const Node& p, const Runner& r) {
    allow_keys(p, {"dim", "blocks", "rho", "pinch"});
    const comp::BasisPartition part = parse_partition(p.field("dim"), p.field("blocks"));
    const Node rho_node = p.field("rho");
    DensityMatrix rho = as_density(rho_node, part.dim());
    const bool do_pinch = p.has("pinch") && p.field("pinch").as_bool();
    if (do_pinch) {
        rho = comp::pinch(rho, part);
    }
    const comp::QuantumContext ctx =
        at_path(rho_node.path(), [&] { return comp::QuantumContext(rho, part); });
    const double tol = r.tol_or(1e-9);

    TaskOutput t;
    const comp::EntropyDecomposition d = comp::entropy_decompose(ctx);
    const double residual = d.total - d.computational - d.noncomputational;
    t.outputs["outcome_count"] = part.outcome_count();
    t.outputs["distribution"] = encode_real_vector(comp::computational_distribution(ctx));
    t.outputs["pinched"] = do_pinch;
    t.outputs["total"] = r.ent(d.total);
    t.outputs["computational"] = r.ent(d.computational);
    t.outputs["noncomputational"] = r.ent(d.noncomputational);
    t.outputs["residual"] = r.ent(residual);
    t.checks["decomposition_identity"] = std::abs(residual) <= tol;
    t.tolerances["decomposition_identity"] = tol;
    t.tolerances["block_structure"] = tol::kBlockStructure;
    t.tolerances["support"] = tol::kSupport;
    return t;
}

TaskOutput run_implements(const Node& p, const Runner& r) {
    allow_keys(p, {"dim", "blocks_in", "blocks_out", "unitary", "rho", "op"});
    const Node dim = p.field("dim");
    const comp::BasisPartition p_in = parse_partition(dim, p.field("blocks_in"));
    const comp::BasisPartition p_out =
        p.has("blocks_out") ? parse_partition(dim, p.field("blocks_out")) : p_in;
    const Node u_node = p.field("unitary");
    const ComplexMatrix u = u_node.as_square_matrix(p_in.dim());
    if (!linalg::is_unitary(u)) {
        u_node.fail("matrix is not unitary within tolerance");
    }
    const Node rho_node = p.field("rho");
    const DensityMatrix rho = as_density(rho_node, p_in.dim());
    const comp::QuantumContext ctx =
        at_path(rho_node.path(), [&] { return comp::QuantumContext(rho, p_in); });
    const Node op_node = p.field("op");
    const comp::StochasticOp op = parse_op(op_node);
    const double tol = r.tol_or(1e-9);
    const comp::ImplementsReport rep = at_path(op_node.path(), [&] {
        return comp::implements_report(u, p_in, p_out, op, ctx, tol);
    });

    TaskOutput t;
    Json dist = Json::array();
    for (const auto& d : rep.distances) {
        dist.push_back(d ? number(*d) : Json(nullptr));
    }
    t.outputs["input_distribution"] = encode_real_vector(comp::computational_distribution(ctx));
    t.outputs["distances"] = dist;
    t.outputs["max_distance"] = number(rep.max_distance);
    t.outputs["implements"] = rep.implements;
    t.checks["implements"] = rep.implements;
    t.tolerances["implements"] = tol;
    t.tolerances["unitary"] = tol::kUnitary;
    t.tolerances["probability"] = tol::kProbability;
    return t;
}

TaskOutput run_landauer(const Node& p, const Runner& r) {
    allow_keys(p, {"beta", "env_hamiltonian", "mode", "states", "target", "unitaries", "reset"});
    const double beta = p.field("beta").as_positive();
    const ThermoContext env(as_hamiltonian(p.field("env_hamiltonian")), beta);
    const Node mode_node = p.field("mode");
    const std::string mode_name = mode_node.as_string();
    channels::ResetMode mode;
    if (mode_name == "conditional") {
        mode = channels::ResetMode::Conditional;
    } else if (mode_name == "unconditional") {
        mode = channels::ResetMode::Unconditional;
    } else {
        mode_node.fail("expected 'conditional' or 'unconditional'");
    }
    const DensityMatrix target = as_density(p.field("target"));
    const std::size_t d_s = target.dim();
    const std::size_t d_e = env.dim();

    const Node states_node = p.field("states");
    std::vector<channels::WeightedState> states;
    for (std::size_t i = 0; i < states_node.size(); ++i) {
        const Node s = states_node.at(i);
        allow_keys(s, {"p", "rho"});
        states.push_back({s.field("p").as_non_negative(), as_density(s.field("rho"), d_s)});
    }

    const bool has_u = p.has("unitaries");
    const bool has_reset = p.has("reset");
    if (has_u == has_reset) {
        p.fail("exactly one of 'unitaries' or 'reset' is required");
    }
    std::vector<ComplexMatrix> unitaries;
    if (has_u) {
        const Node un = p.field("unitaries");
        for (std::size_t i = 0; i < un.size(); ++i) {
            unitaries.push_back(un.at(i).as_square_matrix(d_s * d_e));
        }
    } else {
        const Node rs = p.field("reset");
        allow_keys(rs, {"kind", "perms"});
        const Node kind = rs.field("kind");
        const std::string k = kind.as_string();
        if (k == "swap") {
            if (d_s != d_e) {
                kind.fail("swap reset needs equal system and environment dimensions");
            }
            unitaries.push_back(channels::swap_unitary(d_s));
        } else if (k == "permutation") {
            const Node perms = rs.field("perms");
            for (std::size_t i = 0; i < perms.size(); ++i) {
                const auto perm = perms.at(i).as_index_vector();
                unitaries.push_back(at_path(perms.at(i).path(), [&] {
                    return channels::system_permutation_unitary(perm, d_e);
                }));
            }
        } else {
            kind.fail("expected 'swap' or 'permutation'");
        }
    }
    const channels::ResetScenario scenario = at_path(p.path(), [&] {
        return channels::ResetScenario(std::move(states), target, env, mode, std::move(unitaries));
    });
    const channels::ResetReport rep =
        at_path(p.path(), [&] { return channels::simulate_reset(scenario); });

    const double tol = r.tol_or(tol::kFeasibility);
    const double temperature = env.temperature();
    const DensityMatrix tau = quantum::gibbs_state(env);

    TaskOutput t;
    Json per_state = Json::array();
    bool jensen_ok = true;
    for (std::size_t l = 0; l < scenario.states().size(); ++l) {
        const auto& ws = scenario.states()[l];
        const channels::KrausSet n =
            channels::extract_env_kraus(scenario.unitary_for(l), ws.state, d_s, d_e);
        const double mgf = channels::heat_mgf(n, tau);
        const double jb = channels::jensen_bound(mgf, temperature);
        jensen_ok = jensen_ok && jb <= rep.delta_energy[l] + tol;
        Json s;
        s["p"] = number(ws.probability);
        s["entropy"] = r.ent(quantum::von_neumann_entropy(ws.state));
        s["delta_energy"] = number(rep.delta_energy[l]);
        s["heat_mgf"] = number(mgf);
        s["jensen_bound"] = number(jb);
        per_state.push_back(s);
    }
    t.outputs["mode"] = mode_name;
    t.outputs["beta"] = number(beta);
    t.outputs["temperature"] = number(temperature);
    t.outputs["states"] = per_state;
    t.outputs["average_delta_energy"] = number(rep.average_delta_energy);
    t.outputs["bound"] = number(rep.bound);
    t.outputs["information_erased"] = r.ent(rep.information_erased);
    t.outputs["target_residual"] = number(rep.target_residual);
    t.outputs["reached_target"] = rep.reached_target;
    t.checks["landauer_bound"] = rep.average_delta_energy >= rep.bound - tol;
    t.checks["reached_target"] = rep.reached_target;
    t.checks["jensen_bound"] = jensen_ok;
    t.tolerances["bound_slack"] = tol;
    t.tolerances["target_residual"] = 1e-8;
    t.tolerances["unitary"] = tol::kUnitary;
    return t;
}

TaskOutput run_thermo(const Node& p, const Runner& r) {
    allow_keys(p, {"energies", "hamiltonian", "beta", "rho_in", "rho_out", "alphas", "ordering", "samples"});
    const ThermoContext ctx = parse_thermo(p);
    const Node in_node = p.field("rho_in");
    const Node out_node = p.field("rho_out");
    const DensityMatrix rho_in = as_density(in_node, ctx.dim());
    const DensityMatrix rho_out = as_density(out_node, ctx.dim());
    const auto conv = parse_ordering(p);
    std::size_t samples = 1000;
    if (auto s = p.optional_field("samples")) {
        samples = s->as_index();
    }
    std::vector<double> alphas = resource::default_alpha_grid();
    if (auto a = p.optional_field("alphas")) {
        alphas = a->as_real_vector();
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            if (alphas[i] == 0.0 || alphas[i] == -1.0) {
                a->at(i).fail("order must not be 0 or -1");
            }
        }
    }
    const auto ep_in = at_path(in_node.path(), [&] {
        return resource::energy_populations(rho_in, ctx.hamiltonian());
    });
    const auto ep_out = at_path(out_node.path(), [&] {
        return resource::energy_populations(rho_out, ctx.hamiltonian());
    });
    const double tol = r.tol_or(tol::kFeasibility);

    TaskOutput t;
    const auto c_in = resource::thermomaj_curve(ep_in.second, ep_in.first, ctx.beta(), conv);
    const auto c_out = resource::thermomaj_curve(ep_out.second, ep_out.first, ctx.beta(), conv);
    const bool feasible = resource::thermomaj_feasible(rho_in, rho_out, ctx, conv, samples);
    Json tm;
    tm["feasible"] = feasible;
    tm["curve_in"] = encode_curve(c_in);
    tm["curve_out"] = encode_curve(c_out);
    tm["concave_in"] = c_in.is_concave();
    tm["concave_out"] = c_out.is_concave();
    tm["partition_function"] = number(c_in.z());

    const resource::SecondLawsResult sl = resource::second_laws_check(rho_in, rho_out, ctx, alphas);
    Json margins = Json::array();
    bool laws_ok = true;
    for (const auto& m : sl.margins) {
        laws_ok = laws_ok && m.margin >= -tol;
        margins.push_back({{"alpha", number(m.alpha)},
                           {"free_energy_in", number(m.free_energy_in)},
                           {"free_energy_out", number(m.free_energy_out)},
                           {"margin", number(m.margin)}});
    }
    t.outputs["ordering"] = conv == resource::OrderingConvention::Ratio ? "ratio" : "product";
    t.outputs["samples"] = samples;
    t.outputs["thermomajorization"] = tm;
    t.outputs["second_laws"] = {{"passed", laws_ok}, {"margins", margins}};
    t.outputs["free_energy_in"] = number(quantum::helmholtz_free_energy(rho_in, ctx));
    t.outputs["free_energy_out"] = number(quantum::helmholtz_free_energy(rho_out, ctx));
    t.checks["thermomajorization"] = feasible;
    t.checks["second_laws"] = laws_ok;
    t.tolerances["curve_slack"] = tol::kFeasibility;
    t.tolerances["second_law_slack"] = tol;
    t.tables.emplace_back("curve_in", curve_table(c_in));
    t.tables.emplace_back("curve_out", curve_table(c_out));
    return t;
}

Json encode_verdict(const resource::CtoVerdict& v, const Runner& r, double tol) {
    return {{"feasible", v.margin >= -tol},
            {"free_energy_in", number(v.free_energy_in)},
            {"free_energy_out", number(v.free_energy_out)},
            {"margin", number(v.margin)},
            {"qmi", r.ent(v.qmi)}};
}

TaskOutput run_cto(const Node& p, const Runner& r) {
    allow_keys(p, {"energies", "hamiltonian", "beta", "rho_in", "rho_out", "qmi_budget", "cycle"});
    const ThermoContext ctx = parse_thermo(p);
    const DensityMatrix rho_in = as_density(p.field("rho_in"), ctx.dim());
    const DensityMatrix rho_out = as_density(p.field("rho_out"), ctx.dim());
    const double budget = p.field("qmi_budget").as_non_negative();
    const bool cycle = p.has("cycle") && p.field("cycle").as_bool();
    const double tol = r.tol_or(tol::kFeasibility);

    TaskOutput t;
    if (cycle) {
        const resource::CycleVerdict c =
            resource::compute_reset_cycle_verdict(rho_in, rho_out, ctx, budget);
        const bool ok = c.forward.margin >= -tol && c.backward.margin >= -tol;
        t.outputs["cycle"] = {{"feasible", ok},
                              {"forward", encode_verdict(c.forward, r, tol)},
                              {"backward", encode_verdict(c.backward, r, tol)},
                              {"qmi_total", r.ent(c.qmi_total)},
                              {"margin", number(c.margin)}};
        t.checks["cto_feasible"] = ok;
    } else {
        const resource::CtoVerdict v = resource::cto_feasible_general(rho_in, rho_out, ctx, budget);
        t.outputs["verdict"] = encode_verdict(v, r, tol);
        t.checks["cto_feasible"] = v.margin >= -tol;
    }
    t.tolerances["free_energy_slack"] = tol;
    return t;
}

std::vector<double> parse_times(const Node& p) {
    const bool has_times = p.has("times");
    const bool has_grid = p.has("t_max");
    if (has_times == has_grid) {
        p.fail("exactly one of 'times' or 't_max' is required");
    }
    std::vector<double> times;
    if (has_times) {
        const Node tn = p.field("times");
        times = tn.as_real_vector();
        if (times.empty()) {
            tn.fail("expected at least one time");
        }
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (times[i] < 0.0 || (i > 0 && times[i] < times[i - 1])) {
                tn.at(i).fail("times must be non-negative and nondecreasing");
            }
        }
        return times;
    }
    const double t_max = p.field("t_max").as_positive();
    const Node pts = p.field("points");
    const std::size_t n = pts.as_index();
    if (n < 2) {
        pts.fail("expected at least 2 points");
    }
    for (std::size_t k = 0; k < n; ++k) {
        times.push_back(k + 1 == n ? t_max : t_max * static_cast<double>(k) / static_cast<double>(n - 1));
    }
    return times;
}

TaskOutput run_gksl_evolve(const Node& p, const Runner& r) {
    allow_keys(p, {"hamiltonian", "jumps", "rho0", "times", "t_max", "points", "dephasing"});
    const gksl::Lindbladian l = parse_lindbladian(p);
    const DensityMatrix rho0 = as_density(p.field("rho0"), l.dim());
    const std::vector<double> times = parse_times(p);
    std::optional<comp::BasisPartition> deph_part;
    double t_resolve = 0.0;
    if (auto dn = p.optional_field("dephasing")) {
        allow_keys(*dn, {"blocks", "t_resolve"});
        auto lists = dn->field("blocks").as_index_lists();
        deph_part.emplace(at_path(dn->path() + ".blocks",
                                  [&] { return comp::BasisPartition(l.dim(), std::move(lists)); }));
        t_resolve = dn->field("t_resolve").as_positive();
    }
    const double tol = r.tol_or(1e-9);

    TaskOutput t;
    const gksl::Propagator prop(l);
    const auto d = static_cast<Eigen::Index>(l.dim());
    CsvTable traj;
    traj.header.push_back("t");
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            traj.header.push_back("re_" + std::to_string(i) + "_" + std::to_string(j));
            traj.header.push_back("im_" + std::to_string(i) + "_" + std::to_string(j));
        }
    }
    double max_trace_dev = 0.0;
    double min_eig = 1.0;
    ComplexMatrix last;
    for (double time : times) {
        const ComplexMatrix raw = prop.raw(rho0.matrix(), time);
        (void)prop(rho0, time); // health gate
        max_trace_dev = std::max(max_trace_dev, std::abs(raw.trace() - linalg::Complex(1.0, 0.0)));
        min_eig = std::min(min_eig, linalg::eig_hermitian(linalg::hermitian_part(raw)).values(0));
        std::vector<double> row{time};
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                row.push_back(raw(i, j).real());
                row.push_back(raw(i, j).imag());
            }
        }
        traj.rows.push_back(std::move(row));
        last = raw;
    }
    t.outputs["dim"] = l.dim();
    t.outputs["points"] = times.size();
    t.outputs["final_state"] = encode_matrix(last);
    t.outputs["max_trace_deviation"] = number(max_trace_dev);
    t.outputs["min_eigenvalue"] = number(min_eig);
    t.outputs["generator_trace_residual"] =
        number(gksl::trace_functional_residual(prop.generator()));
    t.checks["trace_preserved"] = max_trace_dev <= tol;
    if (deph_part) {
        const gksl::DephasingResult dr = gksl::dephasing_check(l, *deph_part, rho0, t_resolve);
        t.outputs["dephasing"] = {{"initial_coherence", number(dr.initial_coherence)},
                                  {"residual_coherence", number(dr.residual_coherence)},
                                  {"classical", dr.classical}};
        t.checks["dephased_to_classical"] = dr.classical;
        t.tolerances["dephasing_relative"] = 1e-6;
    }
    t.tolerances["trace_preservation"] = tol;
    t.tolerances["trace_health"] = 1e-9;
    t.tolerances["positivity_health"] = 1e-8;
    t.tables.emplace_back("trajectory", std::move(traj));
    return t;
}

TaskOutput run_gksl_asymptotic(const Node& p, const Runner& r) {
    allow_keys(p, {"hamiltonian", "jumps", "tol", "cesaro", "evolve"});
    const gksl::Lindbladian l = parse_lindbladian(p);
    std::optional<double> dec_tol;
    if (auto tn = p.optional_field("tol")) {
        dec_tol = tn->as_positive();
    }
    struct CesaroSpec {
        double horizon;
        std::size_t samples;
        gksl::Window window;
    };
    std::optional<CesaroSpec> ces;
    if (auto cn = p.optional_field("cesaro")) {
        allow_keys(*cn, {"horizon", "samples", "window"});
        CesaroSpec c{cn->field("horizon").as_positive(), cn->field("samples").as_index(),
                     gksl::Window::Hann};
        if (c.samples < 2) {
            cn->field("samples").fail("expected at least 2 samples");
        }
        if (auto w = cn->optional_field("window")) {
            const std::string s = w->as_string();
            if (s == "uniform") {
                c.window = gksl::Window::Uniform;
            } else if (s != "hann") {
                w->fail("expected 'hann' or 'uniform'");
            }
        }
        ces = c;
    }
    struct EvolveSpec {
        DensityMatrix rho;
        quantum::Hamiltonian h;
        double s;
        std::string path;
    };
    std::optional<EvolveSpec> ev;
    if (auto en = p.optional_field("evolve")) {
        allow_keys(*en, {"rho", "h_inf", "s"});
        ev.emplace(EvolveSpec{as_density(en->field("rho"), l.dim()),
                              as_hamiltonian(en->field("h_inf"), l.dim()),
                              en->field("s").as_non_negative(), en->path()});
    }
    const double agree_tol = r.tol_or(1e-4);
    const double idem_tol = 1e-8;

    TaskOutput t;
    const gksl::AsymptoticDecomposition dec = gksl::decompose(l, dec_tol);
    const ComplexMatrix& pm = dec.p_inf.matrix();
    const double idem = linalg::hs_norm(pm * pm - pm);
    const std::size_t dim = l.dim();
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(dim);
    std::vector<std::size_t> asym(dec.asymptotic.begin(), dec.asymptotic.end());
    t.outputs["method"] = dec.method == gksl::ProjectorMethod::Spectral ? "spectral" : "cesaro";
    t.outputs["asymptotic_tolerance"] = number(dec.tolerance);
    t.outputs["eigenvalues"] = encode_complex_vector(dec.eigenvalues);
    t.outputs["asymptotic_indices"] = encode_indices(asym);
    t.outputs["frequencies"] = encode_real_vector(dec.frequencies);
    t.outputs["stationary_state"] = encode_matrix(dec.p_inf.apply(mixed.matrix()));
    t.outputs["p_a"] = encode_matrix(dec.p_a);
    t.outputs["q"] = encode_matrix(dec.q);
    t.outputs["projector_idempotence"] = number(idem);
    t.checks["projector_idempotent"] = idem <= idem_tol * std::max(1.0, linalg::hs_norm(pm));
    t.tolerances["projector_idempotence"] = idem_tol;
    if (ces) {
        const gksl::SuperoperatorMatrix c =
            gksl::cesaro_projector(l, ces->horizon, ces->samples, ces->window, dec.frequencies);
        const double dist = linalg::hs_norm(c.matrix() - pm);
        t.outputs["cesaro"] = {{"horizon", number(ces->horizon)},
                               {"samples", ces->samples},
                               {"window", ces->window == gksl::Window::Hann ? "hann" : "uniform"},
                               {"distance", number(dist)}};
        t.checks["cesaro_agreement"] = dist <= agree_tol;
        t.tolerances["cesaro_agreement"] = agree_tol;
    }
    if (ev) {
        const DensityMatrix out = at_path(ev->path, [&] {
            return gksl::asymptotic_evolution(dec, ev->rho, ev->h, ev->s);
        });
        t.outputs["evolved_state"] = encode_matrix(out.matrix());
    }
    return t;
}

TaskOutput run_adiabatic(const Node& p, const Runner& r) {
    allow_keys(p, {"e_sig", "tau_r", "tau_e", "c_sw", "c_lk", "t_min", "t_max", "points", "efficiency_c"});
    auto opt_pos = [&](const char* key, double fallback) {
        auto n = p.optional_field(key);
        return n ? n->as_positive() : fallback;
    };
    const adiabatic::AdiabaticParams params(p.field("e_sig").as_positive(), p.field("tau_r").as_positive(),
                                            p.field("tau_e").as_positive(), opt_pos("c_sw", 1.0),
                                            opt_pos("c_lk", 1.0));
    const double t_opt = adiabatic::optimal_ttr(params);
    const double t_min = opt_pos("t_min", t_opt / 100.0);
    const double t_max = opt_pos("t_max", t_opt * 100.0);
    std::size_t points = 201;
    if (auto n = p.optional_field("points")) {
        points = n->as_index();
    }
    const double c = opt_pos("efficiency_c", 1.0);
    const auto rows = at_path(p.path(), [&] { return adiabatic::sweep(params, t_min, t_max, points); });
    const double tol = r.tol_or(1e-12);

    TaskOutput t;
    const double e_min = adiabatic::min_e_diss(params);
    const double e_at_opt = adiabatic::e_diss(params, t_opt);
    const auto best = std::min_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.e_diss < b.e_diss;
    });
    const adiabatic::EfficiencyBound eb = adiabatic::efficiency_bound(params, c);
    t.outputs["tau_r_adj"] = number(params.tau_r_adj());
    t.outputs["tau_e_adj"] = number(params.tau_e_adj());
    t.outputs["asymptotic_regime"] = params.asymptotic_regime();
    t.outputs["optimum"] = {{"t_tr", number(t_opt)},
                            {"e_sw", number(adiabatic::e_sw(params, t_opt))},
                            {"e_lk", number(adiabatic::e_lk(params, t_opt))},
                            {"e_diss", number(e_at_opt)},
                            {"outside_validity", adiabatic::outside_validity(params, t_opt)}};
    t.outputs["min_e_diss"] = number(e_min);
    t.outputs["grid_minimum"] = {{"t_tr", number(best->t_tr)}, {"e_diss", number(best->e_diss)}};
    t.outputs["efficiency_bound"] = {{"c", number(c)},
                                     {"value", number(eb.value)},
                                     {"weak_separation", eb.weak_separation}};
    t.outputs["points"] = rows.size();
    t.checks["optimum_closed_form"] = std::abs(e_at_opt - e_min) <= tol * std::max(1.0, e_min);
    t.checks["grid_above_minimum"] = best->e_diss >= e_min * (1.0 - 1e-12);
    t.tolerances["optimum_closed_form"] = tol;
    t.tolerances["grid_above_minimum"] = 1e-12;

    CsvTable table{{"t_tr", "e_sw", "e_lk", "e_diss"}, {}};
    for (const auto& row : rows) {
        table.rows.push_back({row.t_tr, row.e_sw, row.e_lk, row.e_diss});
    }
    t.tables.emplace_back("sweep", std::move(table));
    return t;
}

TaskOutput dispatch(Task task, const Node& payload, const Runner& r) {
    switch (task) {
    case Task::Classify:
        return run_classify(payload, r);
    case Task::EntropyDecompose:
        return run_entropy_decompose(payload, r);
    case Task::ImplementsCheck:
        return run_implements(payload, r);
    case Task::Landauer:
        return run_landauer(payload, r);
    case Task::ThermoCheck:
        return run_thermo(payload, r);
    case Task::CtoCheck:
        return run_cto(payload, r);
    case Task::GkslEvolve:
        return run_gksl_evolve(payload, r);
    case Task::GkslAsymptotic:
        return run_gksl_asymptotic(payload, r);
    case Task::AdiabaticSweep:
        return run_adiabatic(payload, r);
    }
    throw SchemaError("task", "unsupported task");
}

} // namespace

RunResult run_scenario(const ScenarioFile& scenario, const RunOptions& options) {
    if (options.tol && !(std::isfinite(*options.tol) && *options.tol > 0.0)) {
        throw CliError(kExitSchema, "--tol must be a positive finite number");
    }
    const Runner runner{options, options.units == Units::Bits ? 1.0 / std::log(2.0) : 1.0};
    TaskOutput out;
    try {
        out = dispatch(scenario.task, scenario.payload(), runner);
    } catch (const std::invalid_argument& e) {
        throw SchemaError("payload", e.what());
    }

    RunResult result;
    bool passed = true;
    for (const auto& item : out.checks.items()) {
        passed = passed && item.value().get<bool>();
    }
    Json side = Json::array();
    for (auto& [kind, table] : out.tables) {
        std::string name = scenario.stem + "." + kind + ".csv";
        side.push_back(name);
        result.files.push_back({std::move(name), table.to_string()});
    }
    out.tolerances["hermitian"] = tol::kHermitian;
    out.tolerances["trace"] = tol::kTrace;
    out.tolerances["eigen_clip"] = tol::kEigenClip;

    Json& rep = result.report;
    rep["schema_version"] = kReportSchemaVersion;
    rep["task"] = std::string(task_name(scenario.task));
    rep["inputs_digest"] = scenario.digest;
    rep["units"] = options.units == Units::Bits ? "bits" : "nats";
    rep["tolerances"] = out.tolerances;
    rep["outputs"] = out.outputs;
    rep["checks"] = out.checks;
    rep["passed"] = passed;
    rep["side_files"] = side;
    if (scenario.document.contains("metadata")) {
        rep["metadata"] = scenario.document.at("metadata");
    }
    result.exit_code = passed ? kExitOk : kExitCheckFailed;
    return result;
}

std::string render_report(const Json& report) {
    return report.dump(2) + "\n";
}

} // namespace revtherm::cli
