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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revtherm/cli/json_codec.hpp"

namespace revtherm::cli {

enum class Task {
    Classify,
    EntropyDecompose,
    ImplementsCheck,
    Landauer,
    ThermoCheck,
    CtoCheck,
    GkslEvolve,
    GkslAsymptotic,
    AdiabaticSweep,
};

inline constexpr int kScenarioSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

std::string_view task_name(Task t);
std::optional<Task> task_from_name(std::string_view name);
const std::vector<Task>& all_tasks();

struct ScenarioFile {
    Task task = Task::Classify;
    Json document;             ///< the whole parsed file
    std::string digest;        ///< "sha256:<hex>" of the raw bytes
    std::string stem;          ///< file name without extension, used for side files

    Node payload() const { return Node(document.at("payload"), "payload"); }
};

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// Reads and checks the envelope (task, payload, optional schema_version and
/// metadata). Throws CliError with exit code 1, 2 or 3.
ScenarioFile parse_scenario(const std::filesystem::path& path);
ScenarioFile parse_scenario_text(std::string_view text, std::string stem);

} // namespace revtherm::cli
