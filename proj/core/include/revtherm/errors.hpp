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

namespace revtherm {

/// A precondition of an operation was violated (non-Hermitian input,
/// invalid distribution, non-unitary evolution, ...).
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operand dimensions are incompatible.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computed result drifted outside its numerical health envelope
/// (trace loss, negative eigenvalues beyond tolerance, defective spectra).
class NumericHealthError : public std::runtime_error {
public:
    explicit NumericHealthError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] void throw_contract(const std::string& where, const std::string& what);
[[noreturn]] void throw_shape(const std::string& where, const std::string& what);

} // namespace revtherm
