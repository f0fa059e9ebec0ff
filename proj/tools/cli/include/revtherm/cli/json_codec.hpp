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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "revtherm/cli/exit_codes.hpp"
#include "revtherm/qstate.hpp"

namespace revtherm::cli {

using Json = nlohmann::json;

/// A JSON value together with its path, for schema error messages.
class Node {
public:
    Node(const Json& value, std::string path) : value_(&value), path_(std::move(path)) {}

    const Json& value() const { return *value_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const;

    Node field(const std::string& key) const;
    std::optional<Node> optional_field(const std::string& key) const;
    bool has(const std::string& key) const;
    Node at(std::size_t i) const;
    std::size_t size() const;

    const Json& require_object() const;
    const Json& require_array() const;
    double as_number() const;
    double as_finite() const;
    double as_positive() const;
    double as_non_negative() const;
    std::size_t as_index() const;
    bool as_bool() const;
    std::string as_string() const;
    std::vector<double> as_real_vector() const;
    std::vector<std::size_t> as_index_vector() const;
    std::vector<std::vector<std::size_t>> as_index_lists() const;
    /// Rows of [re, im] pairs; all rows equal length.
    linalg::ComplexMatrix as_complex_matrix() const;
    linalg::ComplexMatrix as_square_matrix(std::size_t expected_dim = 0) const;
    linalg::RealMatrix as_real_matrix() const;

private:
    const Json* value_;
    std::string path_;
};

/// Wraps library construction errors as schema errors at `path`.
template <typename F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path, e.what());
    }
}

quantum::DensityMatrix as_density(const Node& n, std::size_t expected_dim = 0);
quantum::Hamiltonian as_hamiltonian(const Node& n, std::size_t expected_dim = 0);

/// Non-finite values become the strings "inf", "-inf" or "nan".
Json number(double x);
Json encode_matrix(const linalg::ComplexMatrix& m);
Json encode_real_vector(const std::vector<double>& v);
Json encode_complex_vector(const linalg::ComplexVector& v);

} // namespace revtherm::cli
