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

#include "revtherm/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "revtherm/cli/csv.hpp"
#include "revtherm/cli/tasks.hpp"
#include "revtherm/errors.hpp"

namespace revtherm::cli {

namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code = kExitOk;
    std::string diagnostic;
};

void write_side_files(const RunResult& r, const fs::path& dir) {
    if (r.files.empty()) {
        return;
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    for (const auto& f : r.files) {
        write_file_atomic(dir / f.name, f.content);
    }
}

/// Parses, runs and writes one scenario. Report text goes to `report_path`
/// when set and is returned through `stdout_text` otherwise.
Outcome run_one(const fs::path& scenario_path, std::optional<Task> expected, const RunOptions& opts,
                const std::optional<fs::path>& report_path, const fs::path& csv_dir,
                std::string* stdout_text) {
    Outcome o;
    try {
        const ScenarioFile s = parse_scenario(scenario_path);
        if (expected && *expected != s.task) {
            throw SchemaError("task", "scenario task '" + std::string(task_name(s.task)) +
                                          "' does not match command '" +
                                          std::string(task_name(*expected)) + "'");
        }
        const RunResult r = run_scenario(s, opts);
        write_side_files(r, csv_dir);
        const std::string text = render_report(r.report);
        if (report_path) {
            write_file_atomic(*report_path, text);
        } else if (stdout_text) {
            *stdout_text = text;
        }
        o.code = r.exit_code;
        if (o.code == kExitCheckFailed) {
            o.diagnostic = scenario_path.string() + ": one or more checks failed";
        }
    } catch (const CliError& e) {
        o = {e.code(), scenario_path.string() + ": " + e.what()};
    } catch (const NumericHealthError& e) {
        o = {kExitNumericHealth, scenario_path.string() + ": numeric health: " + e.what()};
    } catch (const std::invalid_argument& e) {
        o = {kExitSchema, scenario_path.string() + ": " + e.what()};
    } catch (const fs::filesystem_error& e) {
        o = {kExitMissingFile, scenario_path.string() + ": " + e.what()};
    } catch (const std::exception& e) {
        o = {kExitNumericHealth, scenario_path.string() + ": " + e.what()};
    }
    return o;
}

} // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thermodynamics of reversible computation: scenario runner"};
    app.name("revtherm");

    std::string command;
    std::vector<std::string> scenarios;
    std::string out_file;
    std::string out_dir;
    std::string units = "nats";
    std::optional<double> tol;
    std::string csv_dir;

    std::string commands = "batch";
    for (Task t : all_tasks()) {
        commands += ", " + std::string(task_name(t));
    }
    app.add_option("command", command, "Task name or 'batch' (" + commands + ")")->required();
    app.add_option("--scenario", scenarios, "Scenario JSON file (repeatable in batch mode)")
        ->required();
    app.add_option("--out", out_file, "Report path (default: stdout)");
    app.add_option("--out-dir", out_dir, "Report directory for batch mode");
    app.add_option("--units", units, "Entropy units: bits or nats");
    app.add_option("--tol", tol, "Override the primary check tolerance");
    app.add_option("--csv-dir", csv_dir, "Directory for CSV side files");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "revtherm: " << e.what() << "\n";
        return kExitSchema;
    }

    RunOptions opts;
    if (units == "bits") {
        opts.units = Units::Bits;
    } else if (units != "nats") {
        err << "revtherm: unknown unit '" << units << "' (expected bits or nats)\n";
        return kExitSchema;
    }
    if (tol && !(std::isfinite(*tol) && *tol > 0.0)) {
        err << "revtherm: --tol must be a positive finite number\n";
        return kExitSchema;
    }
    opts.tol = tol;

    if (command != "batch") {
        const auto task = task_from_name(command);
        if (!task) {
            err << "revtherm: unknown command '" << command << "'\n";
            return kExitSchema;
        }
        if (scenarios.size() != 1 || !out_dir.empty()) {
            err << "revtherm: single-task mode takes exactly one --scenario and no --out-dir\n";
            return kExitSchema;
        }
        std::optional<fs::path> report;
        if (!out_file.empty()) {
            report = fs::path(out_file);
        }
        fs::path dir = csv_dir.empty() ? (report ? report->parent_path() : fs::path()) : fs::path(csv_dir);
        if (dir.empty()) {
            dir = ".";
        }
        std::string text;
        const Outcome o = run_one(scenarios.front(), task, opts, report, dir, &text);
        out << text;
        if (!o.diagnostic.empty()) {
            err << "revtherm: " << o.diagnostic << "\n";
        }
        return o.code;
    }

    if (out_dir.empty() || !out_file.empty()) {
        err << "revtherm: batch mode needs --out-dir and does not accept --out\n";
        return kExitSchema;
    }
    std::set<std::string> stems;
    for (const auto& s : scenarios) {
        if (!stems.insert(fs::path(s).stem().string()).second) {
            err << "revtherm: duplicate scenario name '" << fs::path(s).stem().string() << "'\n";
            return kExitSchema;
        }
    }
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    const fs::path csv = csv_dir.empty() ? fs::path(out_dir) : fs::path(csv_dir);

    std::vector<std::future<Outcome>> jobs;
    for (const auto& s : scenarios) {
        const fs::path report = fs::path(out_dir) / (fs::path(s).stem().string() + ".report.json");
        jobs.push_back(std::async(std::launch::async, [=] {
            return run_one(s, std::nullopt, opts, report, csv, nullptr);
        }));
    }
    int code = kExitOk;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Outcome o = jobs[i].get();
        code = std::max(code, o.code);
        out << scenarios[i] << ": exit " << o.code << "\n";
        if (!o.diagnostic.empty()) {
            err << "revtherm: " << o.diagnostic << "\n";
        }
    }
    return code;
}

} // namespace revtherm::cli
