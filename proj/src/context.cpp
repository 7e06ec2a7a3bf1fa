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

#include "qalg/context.hpp"

#include "qalg/error.hpp"

namespace qalg {

std::string to_string(Kind kind) { return kind == Kind::Diagonal ? "diagonal" : "matrix"; }

AlgebraContext::AlgebraContext(Kind kind, std::size_t dim, double tol_herm, double tol_psd)
    : kind(kind), dim(dim), tol_herm(tol_herm), tol_psd(tol_psd) {
    if (dim < 1) {
        throw PreconditionError("algebra dimension must be at least 1");
    }
    if (!(tol_herm > 0.0) || !(tol_psd > 0.0)) {
        throw PreconditionError("algebra tolerances must be positive");
    }
}

std::string AlgebraContext::describe() const {
    return (kind == Kind::Diagonal ? "Diagonal(" : "Matrix(") + std::to_string(dim) + ")";
}

void require_same_context(const AlgebraContext& a, const AlgebraContext& b, const char* op) {
    if (!a.compatible(b)) {
        throw ContextMismatch(std::string(op) + ": context mismatch between " + a.describe() +
                              " and " + b.describe());
    }
}

}  // namespace qalg
