// Copyright 2026 The qalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>

namespace qalg {

/// The two concrete Q-algebra realizations: C^n with pointwise operations,
/// and C^{n x n} with the Loewner order.
enum class Kind { Diagonal, Matrix };

std::string to_string(Kind kind);

/// Which realization a quantity lives in, plus the numeric tolerances that
/// turn the exact order of the algebra into a floating point test.
struct AlgebraContext {
    Kind kind = Kind::Matrix;
    std::size_t dim = 1;
    double tol_herm = 1e-10;
    double tol_psd = 1e-10;

    AlgebraContext() = default;
    AlgebraContext(Kind kind, std::size_t dim, double tol_herm = 1e-10, double tol_psd = 1e-10);

    static AlgebraContext matrix(std::size_t n) { return {Kind::Matrix, n}; }
    static AlgebraContext diagonal(std::size_t n) { return {Kind::Diagonal, n}; }

    bool is_diagonal() const { return kind == Kind::Diagonal; }

    /// Contexts are compatible when kind and dimension agree; tolerances are
    /// carried by the left operand.
    bool compatible(const AlgebraContext& other) const {
        return kind == other.kind && dim == other.dim;
    }

    std::string describe() const;

    /// Exact equality, tolerances included.
    bool operator==(const AlgebraContext&) const = default;
};

/// Throws ContextMismatch naming `op` unless the two contexts are compatible.
void require_same_context(const AlgebraContext& a, const AlgebraContext& b, const char* op);

}  // namespace qalg
