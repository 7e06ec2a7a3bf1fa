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

#include "qalg/linalg.hpp"
#include "qalg/states.hpp"

namespace qalg {

enum class FamilyKind { HamiltonianConjugation, FixedScattering };

/// A one-parameter group S_t of *-automorphisms.
///
/// HamiltonianConjugation: S_t(f) = U f U* with U = exp(-tH/(i hbar)) = exp(itH/hbar),
/// computed from one Hermitian eigendecomposition of H.
/// FixedScattering: the single map S(f) = s f s*, exposed as t = 1 (t = 0 is
/// the identity); other times are rejected.
class AutomorphismFamily {
   public:
    static AutomorphismFamily hamiltonian(const Quantity& h, double hbar = 1.0);
    static AutomorphismFamily scattering(const Quantity& s);

    FamilyKind kind() const { return kind_; }
    const AlgebraContext& ctx() const { return op_.ctx(); }
    /// H or s.
    const Quantity& generator() const { return op_; }
    double hbar() const { return hbar_; }

    /// U with S_t(f) = U f U*. Dense n x n; for Diagonal contexts the diagonal.
    CMatrix propagator(double t) const;

   private:
    AutomorphismFamily(FamilyKind kind, Quantity op, double hbar) : kind_(kind), op_(std::move(op)), hbar_(hbar) {}

    FamilyKind kind_;
    Quantity op_;
    double hbar_ = 1.0;
    linalg::HermitianEigen eig_;
};

/// Heisenberg quantity f(t) = S_t(f).
Quantity evolve_quantity(const AutomorphismFamily& a, const Quantity& f, double t);

/// Schroedinger state v_t = v o S_t: psi -> U* psi, rho -> U* rho U.
/// Classical point states are rejected (no Hamiltonian flow on C^n here).
Valuation evolve_state(const AutomorphismFamily& a, const Valuation& v, double t);

/// The ensemble whose expectations are <S_t(f)>.
Ensemble evolve_ensemble(const AutomorphismFamily& a, const Ensemble& e, double t);

struct FiniteDifferenceCheck {
    /// ||central difference - exact derivative||.
    double residual = 0.0;
    /// ||exact derivative||.
    double reference = 0.0;
};

/// Central difference of f(t) against [f(t), H] / (i hbar).
FiniteDifferenceCheck check_heisenberg_equation(const AutomorphismFamily& a, const Quantity& f, double t,
                                                double dt = 1e-4);

/// Central difference of rho(t) = U* rho U against [H, rho(t)] / (i hbar).
FiniteDifferenceCheck check_von_neumann(const AutomorphismFamily& a, const Ensemble& rho, double t,
                                        double dt = 1e-4);

/// s f s* for unitary s (within 1e-10).
Quantity scattering_map(const Quantity& s, const Quantity& f);

/// Residuals of (A1)-(A3) for one family at one time.
struct AutomorphismResiduals {
    double scalars = 0.0;      // S_t(alpha) = alpha
    double adjoint = 0.0;      // S_t(f*) = S_t(f)*
    double sum = 0.0;          // S_t(f+g) = S_t(f) + S_t(g)
    double product = 0.0;      // S_t(fg) = S_t(f) S_t(g)
    double identity = 0.0;     // S_0(f) = f
    double group_law = 0.0;    // S_{s+t}(f) = S_s(S_t(f)) (Hamiltonian families only)

    double max() const;
};

/// Relative residuals (divided by max(1, scale of the operands)).
AutomorphismResiduals automorphism_residuals(const AutomorphismFamily& a, const Quantity& f, const Quantity& g,
                                             Complex alpha, double t, double s);

}  // namespace qalg
