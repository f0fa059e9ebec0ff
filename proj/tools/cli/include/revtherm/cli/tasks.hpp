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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revtherm/cli/scenario.hpp"

namespace revtherm::cli {

enum class Units { Nats, Bits };

struct RunOptions {
    Units units = Units::Nats;
    /// Overrides the task's primary check tolerance.
    std::optional<double> tol;
};

struct SideFile {
    std::string name; ///< file name only, placed in the CSV directory
    std::string content;
};

struct RunResult {
    Json report;
    int exit_code = kExitOk;
    std::vector<SideFile> files;
};

/// Validates the payload, runs the task and assembles the report. Library
/// contract errors surface as SchemaError; numeric health errors propagate.
RunResult run_scenario(const ScenarioFile& scenario, const RunOptions& options);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string render_report(const Json& report);

} // namespace revtherm::cli
