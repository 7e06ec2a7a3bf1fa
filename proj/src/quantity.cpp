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

#include "qalg/quantity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qalg/error.hpp"
#include "qalg/linalg.hpp"

namespace qalg {

namespace {

void require_finite(const CMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                throw ParseError("quantity entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is not finite");
            }
        }
    }
}

}  // namespace

Quantity::Quantity(AlgebraContext ctx, CMatrix data) : ctx_(ctx), data_(std::move(data)) {
    const auto n = static_cast<Eigen::Index>(ctx_.dim);
    if (ctx_.is_diagonal()) {
        if (data_.rows() != n || data_.cols() != 1) {
            throw ParseError("diagonal quantity needs " + std::to_string(n) + " values, got " +
                             std::to_string(data_.rows()) + "x" + std::to_string(data_.cols()));
        }
    } else if (data_.rows() != n || data_.cols() != n) {
        throw ParseError("matrix quantity needs shape " + std::to_string(n) + "x" + std::to_string(n) +
                         ", got " + std::to_string(data_.rows()) + "x" + std::to_string(data_.cols()));
    }
    require_finite(data_);
}

Quantity::Quantity(AlgebraContext ctx, const CVector& values) : Quantity(ctx, CMatrix(values)) {
    if (!ctx_.is_diagonal()) {
        throw ParseError("value-vector constructor requires a Diagonal context");
    }
}

Quantity Quantity::from_matrix(const CMatrix& m) {
    return Quantity(AlgebraContext::matrix(static_cast<std::size_t>(m.rows())), m);
}

Quantity Quantity::from_values(const CVector& v) {
    return Quantity(AlgebraContext::diagonal(static_cast<std::size_t>(v.size())), v);
}

Quantity Quantity::zero(const AlgebraContext& ctx) { return scalar(ctx, 0.0); }

Quantity Quantity::identity(const AlgebraContext& ctx) { return scalar(ctx, 1.0); }

Quantity Quantity::scalar(const AlgebraContext& ctx, Complex alpha) {
    const auto n = static_cast<Eigen::Index>(ctx.dim);
    if (ctx.is_diagonal()) {
        return Quantity(ctx, CMatrix(CVector::Constant(n, alpha)));
    }
    return Quantity(ctx, CMatrix(alpha * CMatrix::Identity(n, n)));
}

CVector Quantity::values() const {
    if (!is_diagonal()) {
        throw PreconditionError("values() is only defined for diagonal quantities");
    }
    return data_.col(0);
}

CMatrix Quantity::dense() const {
    if (is_diagonal()) {
        return data_.col(0).asDiagonal();
    }
    return data_;
}

Quantity Quantity::with_context(const AlgebraContext& ctx) const {
    require_same_context(ctx_, ctx, "with_context");
    return Quantity(ctx, data_);
}

Quantity add(const Quantity& f, const Quantity& g) {
    require_same_context(f.ctx(), g.ctx(), "add");
    return Quantity(f.ctx(), CMatrix(f.data() + g.data()));
}

Quantity sub(const Quantity& f, const Quantity& g) {
    require_same_context(f.ctx(), g.ctx(), "sub");
    return Quantity(f.ctx(), CMatrix(f.data() - g.data()));
}

Quantity mul(const Quantity& f, const Quantity& g) {
    require_same_context(f.ctx(), g.ctx(), "mul");
    if (f.is_diagonal()) {
        return Quantity(f.ctx(), CMatrix(f.data().cwiseProduct(g.data())));
    }
    return Quantity(f.ctx(), CMatrix(f.data() * g.data()));
}

Quantity scale(Complex alpha, const Quantity& f) { return Quantity(f.ctx(), CMatrix(alpha * f.data())); }

Quantity adjoint(const Quantity& f) {
    if (f.is_diagonal()) {
        return Quantity(f.ctx(), CMatrix(f.data().conjugate()));
    }
    return Quantity(f.ctx(), CMatrix(f.data().adjoint()));
}

Quantity commutator(const Quantity& f, const Quantity& g) {
    require_same_context(f.ctx(), g.ctx(), "commutator");
    if (f.is_diagonal()) {
        return Quantity::zero(f.ctx());
    }
    return Quantity(f.ctx(), CMatrix(f.data() * g.data() - g.data() * f.data()));
}

Quantity re_part(const Quantity& f) { return scale(0.5, f + adjoint(f)); }

Quantity im_part(const Quantity& f) { return scale(Complex(0.0, -0.5), f - adjoint(f)); }

Quantity power(const Quantity& f, unsigned l) {
    Quantity out = Quantity::identity(f.ctx());
    for (unsigned k = 0; k < l; ++k) {
        out = mul(out, f);
    }
    return out;
}

Quantity shift(const Quantity& f, Complex alpha) { return add(f, Quantity::scalar(f.ctx(), alpha)); }

double spectral_norm(const Quantity& f) {
    if (f.is_diagonal()) {
        return f.data().cwiseAbs().maxCoeff();
    }
    return linalg::largest_singular_value(f.data());
}

double hermiticity_residual(const Quantity& f) {
    if (f.is_diagonal()) {
        return f.data().imag().cwiseAbs().maxCoeff() * 2.0;
    }
    // i (f - f*) is Hermitian, so its norm is its largest |eigenvalue|.
    const CMatrix skew = Complex(0.0, 1.0) * (f.data() - f.data().adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(skew, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

bool is_hermitian(const Quantity& f) {
    return hermiticity_residual(f) <= f.ctx().tol_herm * std::max(1.0, spectral_norm(f));
}

bool is_normal(const Quantity& f) {
    const double scale2 = std::max(1.0, spectral_norm(f) * spectral_norm(f));
    return spectral_norm(commutator(f, adjoint(f))) <= f.ctx().tol_herm * scale2;
}

RVector hermitian_eigenvalues(const Quantity& f) {
    if (f.is_diagonal()) {
        RVector v = f.data().col(0).real();
        std::sort(v.data(), v.data() + v.size());
        return v;
    }
    return linalg::eigh(f.data()).values;
}

bool is_positive(const Quantity& f) {
    const double scale = std::max(1.0, spectral_norm(f));
    if (hermiticity_residual(f) > f.ctx().tol_herm * scale) {
        return false;
    }
    return hermitian_eigenvalues(f)(0) >= -f.ctx().tol_psd * scale;
}

bool leq(const Quantity& f, const Quantity& g) {
    require_same_context(f.ctx(), g.ctx(), "leq");
    return is_positive(g - f);
}

double max_abs_diff(const Quantity& f, const Quantity& g) {
    if (f.data().rows() != g.data().rows() || f.data().cols() != g.data().cols()) {
        throw ContextMismatch("max_abs_diff: shape mismatch");
    }
    return (f.data() - g.data()).cwiseAbs().maxCoeff();
}

namespace pauli {

Quantity sigma1() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return Quantity::from_matrix(m);
}

Quantity sigma2() {
    CMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return Quantity::from_matrix(m);
}

Quantity sigma3() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return Quantity::from_matrix(m);
}

Quantity id2() { return Quantity::identity(AlgebraContext::matrix(2)); }

}  // namespace pauli

}  // namespace qalg
