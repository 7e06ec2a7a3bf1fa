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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

#include "qalg/context.hpp"

namespace qalg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// An element of a Q-algebra. Matrix quantities hold an n x n complex matrix;
/// diagonal quantities hold the n values of a function on n points.
///
/// Quantities are immutable values. Scalars enter the algebra as multiples of
/// the identity (see `Quantity::scalar`).
class Quantity {
   public:
    /// Matrix-kind quantity; `data` must be ctx.dim x ctx.dim with finite entries.
    Quantity(AlgebraContext ctx, CMatrix data);
    /// Diagonal-kind quantity; `values` must have ctx.dim finite entries.
    Quantity(AlgebraContext ctx, const CVector& values);

    static Quantity from_matrix(const CMatrix& m);
    static Quantity from_values(const CVector& v);
    static Quantity zero(const AlgebraContext& ctx);
    static Quantity identity(const AlgebraContext& ctx);
    static Quantity scalar(const AlgebraContext& ctx, Complex alpha);

    const AlgebraContext& ctx() const { return ctx_; }
    std::size_t dim() const { return ctx_.dim; }
    bool is_diagonal() const { return ctx_.is_diagonal(); }

    /// Raw storage: n x n for Matrix, n x 1 for Diagonal.
    const CMatrix& data() const { return data_; }
    /// Diagonal values (Diagonal kind only).
    CVector values() const;
    /// Dense n x n matrix in either realization.
    CMatrix dense() const;

    Quantity with_context(const AlgebraContext& ctx) const;

   private:
    AlgebraContext ctx_;
    CMatrix data_;
};

Quantity add(const Quantity& f, const Quantity& g);
Quantity sub(const Quantity& f, const Quantity& g);
Quantity mul(const Quantity& f, const Quantity& g);
Quantity scale(Complex alpha, const Quantity& f);
Quantity adjoint(const Quantity& f);
Quantity commutator(const Quantity& f, const Quantity& g);
Quantity re_part(const Quantity& f);
Quantity im_part(const Quantity& f);
Quantity power(const Quantity& f, unsigned l);

/// f + alpha (alpha embedded as alpha * 1).
Quantity shift(const Quantity& f, Complex alpha);

/// Largest singular value (max modulus for Diagonal).
double spectral_norm(const Quantity& f);

/// ||f - f*||.
double hermiticity_residual(const Quantity& f);
bool is_hermitian(const Quantity& f);
bool is_normal(const Quantity& f);

/// Ascending eigenvalues of the Hermitian part Re f.
RVector hermitian_eigenvalues(const Quantity& f);

/// Loewner positivity with the context's tolerances, scaled by max(1, ||f||).
bool is_positive(const Quantity& f);
/// f <= g, i.e. g - f is positive. Incomparable pairs give false both ways.
bool leq(const Quantity& f, const Quantity& g);

/// Entrywise max |f - g| (no context check beyond shape).
double max_abs_diff(const Quantity& f, const Quantity& g);

inline Quantity operator+(const Quantity& f, const Quantity& g) { return add(f, g); }
inline Quantity operator-(const Quantity& f, const Quantity& g) { return sub(f, g); }
inline Quantity operator*(const Quantity& f, const Quantity& g) { return mul(f, g); }
inline Quantity operator*(Complex alpha, const Quantity& f) { return scale(alpha, f); }
inline Quantity operator*(double alpha, const Quantity& f) { return scale(Complex(alpha, 0.0), f); }
inline Quantity operator-(const Quantity& f) { return scale(Complex(-1.0, 0.0), f); }

/// Pauli matrices and the identity in C^{2x2}.
namespace pauli {
Quantity sigma1();
Quantity sigma2();
Quantity sigma3();
Quantity id2();
}  // namespace pauli

}  // namespace qalg
