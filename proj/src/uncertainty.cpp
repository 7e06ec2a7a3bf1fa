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

#include "qalg/uncertainty.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "qalg/error.hpp"

namespace qalg {

InequalityCheck check_uncertainty_relation(const Ensemble& e, const Quantity& f, const Quantity& g) {
    const double sf = uncertainty(e, f);
    const double sg = uncertainty(e, g);
    const double cov = covariance(e, f, g);
    const Complex comm = 0.5 * (expectation_adjoint_product(e, f, g) - expectation_adjoint_product(e, g, f));
    InequalityCheck out;
    out.lhs = sf * sf * sg * sg;
    out.rhs = cov * cov + std::norm(comm);
    out.holds = out.lhs >= out.rhs - 1e-10 * std::max({1.0, out.lhs, out.rhs});
    return out;
}

InequalityCheck check_cauchy_schwarz(const Ensemble& e, const Quantity& f, const Quantity& g) {
    InequalityCheck out;
    out.lhs = std::norm(expectation_adjoint_product(e, f, g));
    out.rhs = expectation_adjoint_product(e, f, f).real() * expectation_adjoint_product(e, g, g).real();
    out.holds = out.lhs <= out.rhs + 1e-10 * std::max({1.0, out.lhs, out.rhs});
    return out;
}

namespace {

/// Evaluates m(x,y). For matrices (f-x)^2 + (g-y)^2 = B*B with B the stacked
/// 2n x n matrix [f-x; g-y], so m = sigma_min(B)^2. The SVD keeps absolute
/// accuracy near eps ||B|| in sigma_min, where an eigensolver on B*B would
/// only resolve m itself to eps ||B||^2.
class Objective {
   public:
    Objective(const Quantity& f, const Quantity& g) : diagonal_(f.is_diagonal()) {
        if (diagonal_) {
            fv_ = f.data().col(0).real();
            gv_ = g.data().col(0).real();
        } else {
            f_ = f.data();
            g_ = g.data();
        }
    }

    double operator()(double x, double y) const { return diagonal_ ? diag_value(x, y) : eigen(x, y).first; }

    /// lambda_min and its eigenvector (Matrix kind).
    std::pair<double, CVector> eigen(double x, double y) const {
        const auto n = f_.rows();
        CMatrix b(2 * n, n);
        b.topRows(n) = f_ - x * CMatrix::Identity(n, n);
        b.bottomRows(n) = g_ - y * CMatrix::Identity(n, n);
        Eigen::JacobiSVD<CMatrix> svd(b, Eigen::ComputeThinV);
        const double smin = svd.singularValues()(n - 1);
        return {smin * smin, svd.matrixV().col(n - 1)};
    }

    double fixed_point_x(const CVector& u) const { return u.dot(f_ * u).real(); }
    double fixed_point_y(const CVector& u) const { return u.dot(g_ * u).real(); }

    bool diagonal() const { return diagonal_; }
    const RVector& fv() const { return fv_; }
    const RVector& gv() const { return gv_; }

   private:
    double diag_value(double x, double y) const {
        return ((fv_.array() - x).square() + (gv_.array() - y).square()).minCoeff();
    }

    bool diagonal_;
    CMatrix f_, g_;
    RVector fv_, gv_;
};

}  // namespace

double complementarity_objective(const Quantity& f, const Quantity& g, double x, double y) {
    require_same_context(f.ctx(), g.ctx(), "complementarity_objective");
    return Objective(f, g)(x, y);
}

ComplementarityCertificate certify_complementarity(const Quantity& f, const Quantity& g, double range,
                                                   int coarse_steps, bool refine) {
    require_same_context(f.ctx(), g.ctx(), "certify_complementarity");
    if (!is_hermitian(f) || !is_hermitian(g)) {
        throw PreconditionError("certify_complementarity requires Hermitian f and g");
    }
    if (coarse_steps < 2) {
        throw PreconditionError("certify_complementarity needs at least 2 grid steps per axis");
    }
    if (!(range > 0.0)) {
        range = 2.0 * (spectral_norm(f) + spectral_norm(g)) + 1.0;
    }
    const Objective m(f, g);

    ComplementarityCertificate cert;
    cert.grid = {range, coarse_steps};
    double best = std::numeric_limits<double>::infinity();
    double bx = 0.0;
    double by = 0.0;
    const double h = 2.0 * range / (coarse_steps - 1);
    for (int i = 0; i < coarse_steps; ++i) {
        const double x = -range + h * i;
        for (int j = 0; j < coarse_steps; ++j) {
            const double y = -range + h * j;
            const double v = m(x, y);
            if (v < best) {
                best = v;
                bx = x;
                by = y;
            }
        }
    }
    cert.grid_minimum = best;

    if (m.diagonal()) {
        // On C^n the minimum is attained at a point (f(w), g(w)) and is zero.
        for (Eigen::Index k = 0; k < m.fv().size(); ++k) {
            const double x = m.fv()(k);
            const double y = m.gv()(k);
            if (std::abs(x) > range || std::abs(y) > range) continue;
            const double v = m(x, y);
            if (v < best || (v == best && std::pair(x, y) < std::pair(bx, by))) {
                best = v;
                bx = x;
                by = y;
            }
        }
    } else if (refine) {
        double step = h;
        int guard = 0;
        while (step >= 1e-8 && guard++ < 100000) {
            bool moved = false;
            for (const auto& [dx, dy] : {std::pair(-1.0, 0.0), std::pair(1.0, 0.0), std::pair(0.0, -1.0),
                                        std::pair(0.0, 1.0)}) {
                const double x = bx + dx * step;
                const double y = by + dy * step;
                const double v = m(x, y);
                if (v < best) {
                    best = v;
                    bx = x;
                    by = y;
                    moved = true;
                    break;
                }
            }
            if (!moved) step /= 2.0;
        }
        // Majorize-minimize: for the current lambda_min eigenvector u,
        // u*((f-x)^2 + (g-y)^2)u is minimized at x = u*fu, y = u*gu.
        for (int it = 0; it < 200; ++it) {
            const auto [val, u] = m.eigen(bx, by);
            const double x = m.fixed_point_x(u);
            const double y = m.fixed_point_y(u);
            const double v = m(x, y);
            if (!(v < best)) break;
            best = v;
            bx = x;
            by = y;
        }
    }
    cert.refined = refine && !m.diagonal();
    cert.gamma = std::sqrt(std::max(0.0, best));
    cert.argmin_x = bx;
    cert.argmin_y = by;
    return cert;
}

std::pair<Quantity, Quantity> truncated_oscillator(int n, double hbar) {
    if (n < 2) {
        throw PreconditionError("truncated_oscillator needs n >= 2");
    }
    if (!(hbar > 0.0)) {
        throw PreconditionError("hbar must be positive");
    }
    CMatrix a = CMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    const CMatrix ad = a.adjoint();
    const double c = std::sqrt(hbar / 2.0);
    const AlgebraContext ctx = AlgebraContext::matrix(static_cast<std::size_t>(n));
    return {Quantity(ctx, CMatrix(c * (a + ad))), Quantity(ctx, CMatrix(Complex(0.0, c) * (ad - a)))};
}

}  // namespace qalg
