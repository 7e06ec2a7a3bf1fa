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

#include <functional>

#include "qalg/quantity.hpp"

namespace qalg::linalg {

/// Eigen-decomposition of a Hermitian matrix (ascending eigenvalues).
struct HermitianEigen {
    RVector values;
    CMatrix vectors;
};

/// Decomposes the symmetrized part (m + m*)/2.
HermitianEigen eigh(const CMatrix& m);

/// V diag(fn(lambda)) V* for a Hermitian matrix.
CMatrix hermitian_function(const HermitianEigen& eig, const std::function<Complex(double)>& fn);

/// Kronecker product a (x) b with row-major index flattening (i*nb + j).
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

RVector singular_values(const CMatrix& m);
/// Largest singular value from the eigenvalues of the Gram matrix m* m.
double largest_singular_value(const CMatrix& m);

/// ||m* m - 1|| and ||m m* - 1|| (max of both).
double unitarity_residual(const CMatrix& m);

}  // namespace qalg::linalg
