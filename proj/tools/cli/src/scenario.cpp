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

#include "revtherm/cli/scenario.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace revtherm::cli {

namespace {

struct TaskEntry {
    Task task;
    std::string_view name;
};

constexpr std::array<TaskEntry, 9> kTasks{{
    {Task::Classify, "classify"},
    {Task::EntropyDecompose, "entropy-decompose"},
    {Task::ImplementsCheck, "implements-check"},
    {Task::Landauer, "landauer"},
    {Task::ThermoCheck, "thermo-check"},
    {Task::CtoCheck, "cto-check"},
    {Task::GkslEvolve, "gksl-evolve"},
    {Task::GkslAsymptotic, "gksl-asymptotic"},
    {Task::AdiabaticSweep, "adiabatic-sweep"},
}};

} // namespace

std::string_view task_name(Task t) {
    for (const auto& e : kTasks) {
        if (e.task == t) {
            return e.name;
        }
    }
    return "unknown";
}

std::optional<Task> task_from_name(std::string_view name) {
    for (const auto& e : kTasks) {
        if (e.name == name) {
            return e.task;
        }
    }
    return std::nullopt;
}

const std::vector<Task>& all_tasks() {
    static const std::vector<Task> tasks = [] {
        std::vector<Task> v;
        for (const auto& e : kTasks) {
            v.push_back(e.task);
        }
        return v;
    }();
    return tasks;
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw CliError(kExitNumericHealth, "sha256 digest failed");
    }
    std::ostringstream out;
    out << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) {
        out << std::setw(2) << static_cast<int>(md[i]);
    }
    return out.str();
}

ScenarioFile parse_scenario_text(std::string_view text, std::string stem) {
    ScenarioFile s;
    try {
        s.document = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw CliError(kExitMalformedJson, std::string("malformed JSON: ") + e.what());
    }
    const Node root(s.document, "");
    root.require_object();
    if (auto v = root.optional_field("schema_version")) {
        if (v->as_index() != static_cast<std::size_t>(kScenarioSchemaVersion)) {
            v->fail("unsupported schema version");
        }
    }
    const Node task = root.field("task");
    const auto t = task_from_name(task.as_string());
    if (!t) {
        throw SchemaError("task", "unknown task '" + task.as_string() + "'");
    }
    s.task = *t;
    if (!s.document.contains("payload")) {
        throw SchemaError("payload", "required field is missing");
    }
    Node(s.document.at("payload"), "payload").require_object();
    if (s.document.contains("metadata") && !s.document.at("metadata").is_object()) {
        throw SchemaError("metadata", "expected an object");
    }
    s.digest = "sha256:" + sha256_hex(text);
    s.stem = std::move(stem);
    return s;
}

ScenarioFile parse_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError(kExitMissingFile, "cannot open scenario file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path.stem().string());
}

} // namespace revtherm::cli
