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

#include "qalg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qalg/error.hpp"

namespace qalg {

namespace {

constexpr double kUnitaryTol = 1e-10;

/// U f U* in either realization (U diagonal stored as a column for Diagonal).
Quantity conjugate_by(const CMatrix& u, const Quantity& f) {
    if (f.is_diagonal()) {
        return Quantity(f.ctx(), CMatrix(u.col(0).cwiseProduct(f.data().col(0)).cwiseProduct(u.col(0).conjugate())));
    }
    return Quantity(f.ctx(), CMatrix(u * f.data() * u.adjoint()));
}

double rel(const Quantity& a, const Quantity& b) {
    const double scale = std::max({1.0, a.data().cwiseAbs().maxCoeff(), b.data().cwiseAbs().maxCoeff()});
    return max_abs_diff(a, b) / scale;
}

void require_unitary(const Quantity& s) {
    double res;
    if (s.is_diagonal()) {
        res = (s.data().cwiseAbs2().array() - 1.0).abs().maxCoeff();
    } else {
        res = linalg::unitarity_residual(s.data());
    }
    if (res > kUnitaryTol) {
        std::ostringstream os;
        os << "scattering matrix is not unitary: residual " << res;
        throw PreconditionError(os.str());
    }
}

}  // namespace

AutomorphismFamily AutomorphismFamily::hamiltonian(const Quantity& h, double hbar) {
    if (!is_hermitian(h)) {
        throw PreconditionError("Hamiltonian must be Hermitian");
    }
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw PreconditionError("hbar must be positive");
    }
    AutomorphismFamily a(FamilyKind::HamiltonianConjugation, h, hbar);
    if (h.is_diagonal()) {
        a.eig_.values = h.data().col(0).real();
    } else {
        a.eig_ = linalg::eigh(h.data());
    }
    return a;
}

AutomorphismFamily AutomorphismFamily::scattering(const Quantity& s) {
    require_unitary(s);
    return AutomorphismFamily(FamilyKind::FixedScattering, s, 1.0);
}

CMatrix AutomorphismFamily::propagator(double t) const {
    const auto n = static_cast<Eigen::Index>(ctx().dim);
    if (kind_ == FamilyKind::FixedScattering) {
        if (t == 0.0) {
            return ctx().is_diagonal() ? CMatrix(CMatrix::Ones(n, 1)) : CMatrix(CMatrix::Identity(n, n));
        }
        if (t == 1.0) {
            return op_.data();
        }
        throw PreconditionError("a scattering automorphism is a single map; only t = 0 and t = 1 are defined");
    }
    // exp(-tH/(i hbar)) = exp(i t H / hbar)
    const auto phase = [&](double lambda) { return std::exp(Complex(0.0, t * lambda / hbar_)); };
    if (ctx().is_diagonal()) {
        CMatrix u(n, 1);
        for (Eigen::Index k = 0; k < n; ++k) u(k, 0) = phase(eig_.values(k));
        return u;
    }
    return linalg::hermitian_function(eig_, phase);
}

Quantity evolve_quantity(const AutomorphismFamily& a, const Quantity& f, double t) {
    require_same_context(a.ctx(), f.ctx(), "evolve_quantity");
    return conjugate_by(a.propagator(t), f);
}

Ensemble evolve_ensemble(const AutomorphismFamily& a, const Ensemble& e, double t) {
    require_same_context(a.ctx(), e.ctx(), "evolve_ensemble");
    const CMatrix u = a.propagator(t);
    const AlgebraContext& ctx = e.ctx();
    if (ctx.is_diagonal()) {
        // Automorphisms of C^n given by diagonal unitaries act trivially on functions.
        return e;
    }
    switch (e.form()) {
        case EnsembleForm::PureVector:
            return Ensemble::pure(ctx, u.adjoint() * e.psi());
        case EnsembleForm::Gibbs:
            return Ensemble::gibbs(ctx, u.adjoint() * e.entropy() * u, e.kbar());
        case EnsembleForm::Weighted:
        case EnsembleForm::Density:
            return Ensemble::density(ctx, u.adjoint() * e.density_matrix() * u);
    }
    throw Error("unreachable ensemble form");
}

Valuation evolve_state(const AutomorphismFamily& a, const Valuation& v, double t) {
    require_same_context(a.ctx(), v.ctx(), "evolve_state");
    switch (v.kind()) {
        case ValuationKind::ClassicalPoint:
            throw PreconditionError(
                "classical point states have no Schroedinger evolution here (needs a Poisson structure)");
        case ValuationKind::Copenhagen: {
            const CMatrix u = a.propagator(t);
            const CVector psi = v.ctx().is_diagonal() ? CVector(u.col(0).conjugate().cwiseProduct(v.psi()))
                                                      : CVector(u.adjoint() * v.psi());
            return Valuation::copenhagen(v.ctx(), psi);
        }
        case ValuationKind::EnsembleState:
            return Valuation::ensemble_state(evolve_ensemble(a, v.ensemble(), t));
    }
    throw Error("unreachable valuation kind");
}

namespace {

void require_flow(const AutomorphismFamily& a, double dt) {
    if (a.kind() != FamilyKind::HamiltonianConjugation) {
        throw PreconditionError("differential checks need a Hamiltonian family");
    }
    if (!(dt > 0.0)) {
        throw PreconditionError("dt must be positive");
    }
}

}  // namespace

FiniteDifferenceCheck check_heisenberg_equation(const AutomorphismFamily& a, const Quantity& f, double t, double dt) {
    require_flow(a, dt);
    const Quantity ft = evolve_quantity(a, f, t);
    const Quantity diff = scale(1.0 / (2.0 * dt), evolve_quantity(a, f, t + dt) - evolve_quantity(a, f, t - dt));
    const Quantity exact = scale(Complex(0.0, -1.0 / a.hbar()), commutator(ft, a.generator()));
    return {spectral_norm(diff - exact), spectral_norm(exact)};
}

FiniteDifferenceCheck check_von_neumann(const AutomorphismFamily& a, const Ensemble& rho, double t, double dt) {
    require_flow(a, dt);
    require_same_context(a.ctx(), rho.ctx(), "check_von_neumann");
    if (rho.ctx().is_diagonal()) {
        throw PreconditionError("check_von_neumann needs a Matrix context");
    }
    const auto density_at = [&](double s) { return Quantity(rho.ctx(), evolve_ensemble(a, rho, s).density_matrix()); };
    const Quantity rt = density_at(t);
    const Quantity diff = scale(1.0 / (2.0 * dt), density_at(t + dt) - density_at(t - dt));
    const Quantity exact = scale(Complex(0.0, -1.0 / a.hbar()), commutator(a.generator(), rt));
    return {spectral_norm(diff - exact), spectral_norm(exact)};
}

Quantity scattering_map(const Quantity& s, const Quantity& f) {
    require_same_context(s.ctx(), f.ctx(), "scattering_map");
    require_unitary(s);
    return conjugate_by(s.data(), f);
}

double AutomorphismResiduals::max() const {
    return std::max({scalars, adjoint, sum, product, identity, group_law});
}

AutomorphismResiduals automorphism_residuals(const AutomorphismFamily& a, const Quantity& f, const Quantity& g,
                                             Complex alpha, double t, double s) {
    AutomorphismResiduals r;
    const auto S = [&](const Quantity& x, double time) { return evolve_quantity(a, x, time); };
    const Quantity al = Quantity::scalar(f.ctx(), alpha);
    r.scalars = rel(S(al, t), al);
    r.adjoint = rel(S(qalg::adjoint(f), t), qalg::adjoint(S(f, t)));
    r.sum = rel(S(f + g, t), S(f, t) + S(g, t));
    r.product = rel(S(f * g, t), S(f, t) * S(g, t));
    r.identity = rel(S(f, 0.0), f);
    if (a.kind() == FamilyKind::HamiltonianConjugation) {
        r.group_law = rel(S(f, s + t), S(S(f, t), s));
    }
    return r;
}

}  // namespace qalg
