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

#include <stdexcept>
#include <string>

namespace revtherm::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitMissingFile = 1,
    kExitMalformedJson = 2,
    kExitSchema = 3,
    kExitCheckFailed = 4,
    kExitNumericHealth = 5,
};

/// Error carrying the process exit code it maps to.
class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

/// Schema violation at a JSON path such as "payload.states[0].rho[1][0]".
class SchemaError : public CliError {
public:
    SchemaError(const std::string& path, const std::string& what)
        : CliError(kExitSchema, (path.empty() ? std::string("$") : path) + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace revtherm::cli
