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
#include <string>
#include <string_view>
#include <vector>

namespace revtherm::cli {

/// Numeric table written with '.' decimals, '\n' line endings and a header row.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string to_string() const;
};

/// Shortest round-trip decimal form of x (locale independent).
std::string format_double(double x);

/// Write to a sibling temporary file and rename it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace revtherm::cli
