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

#include "qalg/random.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace qalg::random {

Complex gaussian_complex(Engine& rng) {
    std::normal_distribution<double> normal(0.0, M_SQRT1_2);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

CMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Engine& rng) {
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            m(i, j) = gaussian_complex(rng);
        }
    }
    return m;
}

CVector unit_vector(std::size_t n, Engine& rng) {
    CVector v = gaussian_matrix(n, 1, rng).col(0);
    return v / v.norm();
}

CMatrix unitary(std::size_t n, Engine& rng) {
    const CMatrix g = gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const Complex d = r(k, k);
        if (std::abs(d) > 0.0) {
            q.col(k) *= d / std::abs(d);
        }
    }
    return q;
}

Quantity quantity(const AlgebraContext& ctx, Engine& rng) {
    if (ctx.is_diagonal()) {
        return Quantity(ctx, gaussian_matrix(ctx.dim, 1, rng));
    }
    return Quantity(ctx, gaussian_matrix(ctx.dim, ctx.dim, rng));
}

Quantity hermitian(const AlgebraContext& ctx, Engine& rng) {
    if (ctx.is_diagonal()) {
        CMatrix v = gaussian_matrix(ctx.dim, 1, rng).real().cast<Complex>();
        return Quantity(ctx, v);
    }
    const CMatrix g = gaussian_matrix(ctx.dim, ctx.dim, rng);
    return Quantity(ctx, CMatrix((g + g.adjoint()) / 2.0));
}

Quantity positive(const AlgebraContext& ctx, Engine& rng) {
    const Quantity g = quantity(ctx, rng);
    return adjoint(g) * g;
}

Quantity effect(const AlgebraContext& ctx, Engine& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    CVector eig(ctx.dim);
    for (auto& x : eig) {
        x = unif(rng);
    }
    if (ctx.is_diagonal()) {
        return Quantity(ctx, eig);
    }
    const CMatrix u = unitary(ctx.dim, rng);
    return Quantity(ctx, CMatrix(u * eig.asDiagonal() * u.adjoint()));
}

Quantity event(const AlgebraContext& ctx, std::size_t rank, Engine& rng) {
    rank = std::min(rank, ctx.dim);
    if (ctx.is_diagonal()) {
        std::vector<std::size_t> idx(ctx.dim);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        CVector v = CVector::Zero(ctx.dim);
        for (std::size_t i = 0; i < rank; ++i) v(idx[i]) = 1.0;
        return Quantity(ctx, v);
    }
    const CMatrix u = unitary(ctx.dim, rng);
    const CMatrix cols = u.leftCols(rank);
    return Quantity(ctx, CMatrix(cols * cols.adjoint()));
}

CMatrix density(std::size_t n, Engine& rng, std::size_t rank) {
    if (rank == 0 || rank > n) rank = n;
    const CMatrix g = gaussian_matrix(n, rank, rng);
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return (rho + rho.adjoint()) / 2.0;
}

RVector weights(std::size_t n, Engine& rng) {
    std::exponential_distribution<double> expo(1.0);
    RVector w(n);
    for (auto& x : w) {
        x = expo(rng);
    }
    return w / w.sum();
}

}  // namespace qalg::random
