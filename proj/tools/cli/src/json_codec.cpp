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

#include "revtherm/cli/json_codec.hpp"

#include <cmath>
#include <utility>

namespace revtherm::cli {

namespace {

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

} // namespace

void Node::fail(const std::string& what) const {
    throw SchemaError(path_, what);
}

Node Node::field(const std::string& key) const {
    const Json& obj = require_object();
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(join(path_, key), "required field is missing");
    }
    return Node(*it, join(path_, key));
}

std::optional<Node> Node::optional_field(const std::string& key) const {
    const Json& obj = require_object();
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        return std::nullopt;
    }
    return Node(*it, join(path_, key));
}

bool Node::has(const std::string& key) const {
    return optional_field(key).has_value();
}

Node Node::at(std::size_t i) const {
    const Json& arr = require_array();
    if (i >= arr.size()) {
        fail("index " + std::to_string(i) + " out of range");
    }
    return Node(arr[i], path_ + "[" + std::to_string(i) + "]");
}

std::size_t Node::size() const {
    return require_array().size();
}

const Json& Node::require_object() const {
    if (!value_->is_object()) {
        fail("expected an object");
    }
    return *value_;
}

const Json& Node::require_array() const {
    if (!value_->is_array()) {
        fail("expected an array");
    }
    return *value_;
}

double Node::as_number() const {
    if (!value_->is_number()) {
        fail("expected a number");
    }
    return value_->get<double>();
}

double Node::as_finite() const {
    const double x = as_number();
    if (!std::isfinite(x)) {
        fail("expected a finite number");
    }
    return x;
}

double Node::as_positive() const {
    const double x = as_finite();
    if (x <= 0.0) {
        fail("expected a positive number");
    }
    return x;
}

double Node::as_non_negative() const {
    const double x = as_finite();
    if (x < 0.0) {
        fail("expected a non-negative number");
    }
    return x;
}

std::size_t Node::as_index() const {
    if (!value_->is_number_integer() || value_->get<long long>() < 0) {
        fail("expected a non-negative integer");
    }
    return value_->get<std::size_t>();
}

bool Node::as_bool() const {
    if (!value_->is_boolean()) {
        fail("expected a boolean");
    }
    return value_->get<bool>();
}

std::string Node::as_string() const {
    if (!value_->is_string()) {
        fail("expected a string");
    }
    return value_->get<std::string>();
}

std::vector<double> Node::as_real_vector() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < size(); ++i) {
        out.push_back(at(i).as_finite());
    }
    return out;
}

std::vector<std::size_t> Node::as_index_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        out.push_back(at(i).as_index());
    }
    return out;
}

std::vector<std::vector<std::size_t>> Node::as_index_lists() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        out.push_back(at(i).as_index_vector());
    }
    return out;
}

linalg::ComplexMatrix Node::as_complex_matrix() const {
    const std::size_t rows = size();
    if (rows == 0) {
        fail("matrix must have at least one row");
    }
    const std::size_t cols = at(0).size();
    if (cols == 0) {
        at(0).fail("matrix rows must be non-empty");
    }
    linalg::ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        const Node row = at(i);
        if (row.size() != cols) {
            row.fail("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const Node entry = row.at(j);
            if (!entry.value().is_array() || entry.value().size() != 2) {
                entry.fail("expected a [re, im] pair");
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                linalg::Complex(entry.at(0).as_finite(), entry.at(1).as_finite());
        }
    }
    return m;
}

linalg::ComplexMatrix Node::as_square_matrix(std::size_t expected_dim) const {
    linalg::ComplexMatrix m = as_complex_matrix();
    if (m.rows() != m.cols()) {
        fail("matrix must be square");
    }
    if (expected_dim != 0 && static_cast<std::size_t>(m.rows()) != expected_dim) {
        fail("matrix dimension " + std::to_string(m.rows()) + " does not match " + std::to_string(expected_dim));
    }
    return m;
}

linalg::RealMatrix Node::as_real_matrix() const {
    const std::size_t rows = size();
    if (rows == 0) {
        fail("matrix must have at least one row");
    }
    const std::size_t cols = at(0).size();
    linalg::RealMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        const Node row = at(i);
        if (row.size() != cols) {
            row.fail("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row.at(j).as_finite();
        }
    }
    return m;
}

quantum::DensityMatrix as_density(const Node& n, std::size_t expected_dim) {
    const linalg::ComplexMatrix m = n.as_square_matrix(expected_dim);
    return at_path(n.path(), [&] { return quantum::DensityMatrix(m); });
}

quantum::Hamiltonian as_hamiltonian(const Node& n, std::size_t expected_dim) {
    const linalg::ComplexMatrix m = n.as_square_matrix(expected_dim);
    return at_path(n.path(), [&] { return quantum::Hamiltonian(m); });
}

Json number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (x == 0.0) {
        return 0.0; // normalizes -0.0
    }
    return x;
}

Json encode_matrix(const linalg::ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(Json::array({number(m(i, j).real()), number(m(i, j).imag())}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json encode_real_vector(const std::vector<double>& v) {
    Json out = Json::array();
    for (double x : v) {
        out.push_back(number(x));
    }
    return out;
}

Json encode_complex_vector(const linalg::ComplexVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(Json::array({number(v(i).real()), number(v(i).imag())}));
    }
    return out;
}

} // namespace revtherm::cli
