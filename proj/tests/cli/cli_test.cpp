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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "revtherm/cli/app.hpp"

namespace revtherm::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kSource = REVTHERM_SOURCE_DIR;
const fs::path kScenarios = kSource / "scenarios";
const fs::path kGolden = kSource / "tests" / "golden";

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& s) {
    std::ofstream(p, std::ios::binary) << s;
}

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("revtherm_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::string task_of(const fs::path& scenario) {
    return json::parse(slurp(scenario)).at("task").get<std::string>();
}

std::vector<fs::path> bundled() {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(kScenarios)) {
        if (e.path().extension() == ".json") {
            out.push_back(e.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST(Golden, BundledScenariosAreByteStable) {
    const auto files = bundled();
    ASSERT_GE(files.size(), 9u);
    for (int pass = 0; pass < 2; ++pass) {
        for (const fs::path& f : files) {
            TempDir tmp;
            const std::string stem = f.stem().string();
            const fs::path report = tmp.path() / (stem + ".report.json");
            const Invocation r = run({task_of(f), "--scenario", f.string(), "--out", report.string(), "--csv-dir",
                               tmp.path().string()});
            EXPECT_EQ(r.code, 0) << stem << ": " << r.err;
            EXPECT_EQ(slurp(report), slurp(kGolden / (stem + ".report.json"))) << stem;
            for (const auto& side : json::parse(slurp(report)).at("side_files")) {
                const std::string name = side.get<std::string>();
                EXPECT_EQ(slurp(tmp.path() / name), slurp(kGolden / name)) << name;
            }
        }
    }
}

TEST(Golden, StdoutMatchesFileOutput) {
    const fs::path f = kScenarios / "erasure_bit.json";
    TempDir tmp;
    const Invocation r = run({"landauer", "--scenario", f.string(), "--csv-dir", tmp.path().string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(kGolden / "erasure_bit.report.json"));
}

TEST(Reports, ErasureBoundAndEnergy) {
    const json rep = json::parse(slurp(kGolden / "erasure_bit.report.json"));
    EXPECT_NEAR(rep["outputs"]["bound"].get<double>(), std::log(2.0), 1e-12);
    EXPECT_GE(rep["outputs"]["average_delta_energy"].get<double>(), rep["outputs"]["bound"].get<double>() - 1e-9);
    const json cond = json::parse(slurp(kGolden / "erasure_bit_conditional.report.json"));
    EXPECT_NEAR(cond["outputs"]["bound"].get<double>(), 0.0, 1e-9);
    EXPECT_NEAR(cond["outputs"]["average_delta_energy"].get<double>(), 0.0, 1e-9);
}

TEST(Reports, DephasingTrajectoryFollowsExponential) {
    const double kappa = 0.5;
    std::istringstream csv(slurp(kGolden / "dephasing.trajectory.csv"));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "t,re_0_0,im_0_0,re_0_1,im_0_1,re_1_0,im_1_0,re_1_1,im_1_1");
    int rows = 0;
    while (std::getline(csv, line)) {
        std::vector<double> v;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) {
            v.push_back(std::stod(cell));
        }
        ASSERT_EQ(v.size(), 9u);
        const double expected = 0.5 * std::exp(-2.0 * kappa * v[0]);
        EXPECT_NEAR(std::hypot(v[3], v[4]), expected, 1e-6 * expected);
        EXPECT_NEAR(v[1] + v[7], 1.0, 1e-9);
        ++rows;
    }
    EXPECT_EQ(rows, 20);
}

TEST(Reports, AdiabaticOptimumMatchesClosedForm) {
    const json rep = json::parse(slurp(kGolden / "adiabatic.report.json"));
    const json& opt = rep["outputs"]["optimum"];
    EXPECT_NEAR(opt["t_tr"].get<double>(), std::sqrt(1e-12 * 1e-8), 1e-12 * 1e-10);
    EXPECT_NEAR(opt["e_diss"].get<double>(), 2.0 * std::sqrt(1e-12 / 1e-8), 1e-14);
    const std::string csv = slurp(kGolden / "adiabatic.sweep.csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "t_tr,e_sw,e_lk,e_diss");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 122);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(ExitCodes, MissingFile) {
    const Invocation r = run({"landauer", "--scenario", (kScenarios / "no_such_file.json").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
}

TEST(ExitCodes, UnwritableOutput) {
    TempDir tmp;
    spit(tmp.path() / "plain", "x");
    const Invocation r = run({"landauer", "--scenario", (kScenarios / "erasure_bit.json").string(), "--out",
                       (tmp.path() / "plain" / "report.json").string()});
    EXPECT_EQ(r.code, 1);
}

TEST(ExitCodes, TruncatedJson) {
    TempDir tmp;
    const std::string full = slurp(kScenarios / "dephasing.json");
    const fs::path f = tmp.path() / "truncated.json";
    spit(f, full.substr(0, full.size() / 2));
    const Invocation r = run({"gksl-evolve", "--scenario", f.string()});
    EXPECT_EQ(r.code, 2);
}

TEST(ExitCodes, OddInnerArrayNamesThePath) {
    TempDir tmp;
    json s = json::parse(slurp(kScenarios / "dephasing.json"));
    s["payload"]["rho0"][1][0] = json::array({0.5, 0.0, 0.0});
    const fs::path f = tmp.path() / "odd.json";
    spit(f, s.dump());
    const Invocation r = run({"gksl-evolve", "--scenario", f.string()});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("payload.rho0[1][0]"), std::string::npos) << r.err;
}

TEST(ExitCodes, SchemaViolations) {
    TempDir tmp;
    json s = json::parse(slurp(kScenarios / "adiabatic.json"));
    s["payload"]["surprise"] = 1;
    spit(tmp.path() / "extra.json", s.dump());
    EXPECT_EQ(run({"adiabatic-sweep", "--scenario", (tmp.path() / "extra.json").string()}).code, 3);
    s = json::parse(slurp(kScenarios / "adiabatic.json"));
    s["payload"].erase("tau_e");
    spit(tmp.path() / "missing.json", s.dump());
    const Invocation r = run({"adiabatic-sweep", "--scenario", (tmp.path() / "missing.json").string()});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("tau_e"), std::string::npos) << r.err;
}

TEST(ExitCodes, UsageErrors) {
    const std::string f = (kScenarios / "erasure_bit.json").string();
    EXPECT_EQ(run({"landauer", "--scenario", f, "--units", "furlongs"}).code, 3);
    EXPECT_EQ(run({"gksl-evolve", "--scenario", f}).code, 3);
    EXPECT_EQ(run({"no-such-task", "--scenario", f}).code, 3);
    EXPECT_EQ(run({"landauer", "--scenario", f, "--tol", "-1"}).code, 3);
    EXPECT_EQ(run({"landauer"}).code, 3);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(ExitCodes, FailedCheckStillEmitsReport) {
    TempDir tmp;
    json s = json::parse(slurp(kScenarios / "thermo_to_gibbs.json"));
    // Gibbs state to a pure excited state is not thermomajorized.
    std::swap(s["payload"]["rho_in"], s["payload"]["rho_out"]);
    s["payload"]["rho_out"] = json::parse("[[[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]],[[0,0],[0,0],[1,0]]]");
    const fs::path f = tmp.path() / "infeasible.json";
    spit(f, s.dump());
    const Invocation r = run({"thermo-check", "--scenario", f.string(), "--csv-dir", tmp.path().string()});
    EXPECT_EQ(r.code, 4);
    const json rep = json::parse(r.out);
    EXPECT_FALSE(rep["passed"].get<bool>());
    EXPECT_FALSE(rep["checks"]["thermomajorization"].get<bool>());
}

TEST(ExitCodes, NumericHealth) {
    TempDir tmp;
    const json s = json::parse(R"({"schema_version": 1, "task": "gksl-evolve", "payload": {
        "hamiltonian": [[[1e300, 0], [1e300, 0]], [[1e300, 0], [-1e300, 0]]],
        "jumps": [{"op": [[[1e200, 0], [0, 0]], [[0, 0], [1e200, 0]]], "rate": 1e100}],
        "rho0": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
        "times": [1.0]}})");
    const fs::path f = tmp.path() / "overflow.json";
    spit(f, s.dump());
    const Invocation r = run({"gksl-evolve", "--scenario", f.string(), "--csv-dir", tmp.path().string()});
    EXPECT_EQ(r.code, 5);
    EXPECT_NE(r.err.find("numeric health"), std::string::npos) << r.err;
}

TEST(Units, BitsScaleEntropiesOnly) {
    TempDir tmp;
    const std::string f = (kScenarios / "erasure_bit.json").string();
    const Invocation bits = run({"landauer", "--scenario", f, "--units", "bits"});
    const Invocation nats = run({"landauer", "--scenario", f, "--units", "nats"});
    ASSERT_EQ(bits.code, 0);
    ASSERT_EQ(nats.code, 0);
    const json b = json::parse(bits.out);
    const json n = json::parse(nats.out);
    EXPECT_EQ(b["units"], "bits");
    EXPECT_EQ(n["units"], "nats");
    EXPECT_NEAR(b["outputs"]["information_erased"].get<double>(), 1.0, 1e-15);
    EXPECT_EQ(b["outputs"]["bound"], n["outputs"]["bound"]);
    EXPECT_EQ(nats.out, slurp(kGolden / "erasure_bit.report.json"));
}

TEST(Batch, WritesReportsAndReturnsWorstCode) {
    TempDir tmp;
    json s = json::parse(slurp(kScenarios / "adiabatic.json"));
    s["payload"]["surprise"] = true;
    const fs::path bad = tmp.path() / "bad.json";
    spit(bad, s.dump());
    const fs::path out = tmp.path() / "reports";
    const Invocation r = run({"batch", "--scenario", (kScenarios / "erasure_bit.json").string(), "--scenario",
                       (kScenarios / "dephasing.json").string(), "--scenario", bad.string(), "--out-dir",
                       out.string()});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(slurp(out / "erasure_bit.report.json"), slurp(kGolden / "erasure_bit.report.json"));
    EXPECT_EQ(slurp(out / "dephasing.report.json"), slurp(kGolden / "dephasing.report.json"));
    EXPECT_EQ(slurp(out / "dephasing.trajectory.csv"), slurp(kGolden / "dephasing.trajectory.csv"));
    EXPECT_FALSE(fs::exists(out / "bad.report.json"));
    EXPECT_EQ(run({"batch", "--scenario", (kScenarios / "erasure_bit.json").string()}).code, 3);
}

} // namespace
} // namespace revtherm::cli
