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

#include <string>

#include "qalg/quantity.hpp"

namespace qalg {

enum class EnsembleForm { Weighted, PureVector, Density, Gibbs };

std::string to_string(EnsembleForm form);

/// Residuals of the raw input recorded before a density matrix is repaired
/// (re-symmetrized and trace-normalized).
struct DensityResiduals {
    double hermiticity = 0.0;
    double trace = 0.0;
    double min_eigenvalue = 0.0;
};

/// An expectation functional satisfying (E1)-(E3) over an algebra context.
///
/// Weighted ensembles work in both realizations (on a matrix context they act
/// as the diagonal density diag(p)); the other forms need a Matrix context.
class Ensemble {
   public:
    /// Weights must be nonnegative with a positive sum; they are normalized.
    static Ensemble weighted(const AlgebraContext& ctx, const RVector& weights);
    /// psi is normalized; rejected when its norm is off by more than 1e-6.
    static Ensemble pure(const AlgebraContext& ctx, const CVector& psi);
    /// rho is re-symmetrized and trace-normalized; rejected when any raw
    /// residual (hermiticity, trace, negative eigenvalue) exceeds 1e-6.
    static Ensemble density(const AlgebraContext& ctx, const CMatrix& rho);
    /// Equilibrium ensemble tr(exp(-S/kbar) f). S is shifted by kbar log Z so
    /// that tr exp(-S/kbar) = 1.
    static Ensemble gibbs(const AlgebraContext& ctx, const CMatrix& entropy, double kbar = 1.0);

    EnsembleForm form() const { return form_; }
    const AlgebraContext& ctx() const { return ctx_; }

    const RVector& weights() const { return weights_; }
    const CVector& psi() const { return psi_; }
    /// Density operator for Density and Gibbs forms.
    const CMatrix& rho() const { return rho_; }
    /// Normalized entropy S (Gibbs form).
    const CMatrix& entropy() const { return entropy_; }
    double kbar() const { return kbar_; }
    const DensityResiduals& residuals() const { return residuals_; }

    /// Dense density matrix for any form on a Matrix context.
    CMatrix density_matrix() const;

   private:
    Ensemble(AlgebraContext ctx, EnsembleForm form) : ctx_(ctx), form_(form) {}

    AlgebraContext ctx_;
    EnsembleForm form_;
    RVector weights_;
    CVector psi_;
    CMatrix rho_;
    CMatrix entropy_;
    double kbar_ = 1.0;
    DensityResiduals residuals_;
};

/// <f>.
Complex expectation(const Ensemble& e, const Quantity& f);
/// <f* g>, computed without forming f* g where the form allows it.
Complex expectation_adjoint_product(const Ensemble& e, const Quantity& f, const Quantity& g);

/// Re <(f - <f>)* (g - <g>)>.
double covariance(const Ensemble& e, const Quantity& f, const Quantity& g);
/// sqrt(cov(f, f)); radicands in [-1e-12 max(1,||f||^2), 0) are clamped to 0,
/// anything more negative throws (the ensemble is broken).
double uncertainty(const Ensemble& e, const Quantity& f);
/// |<f* f>| <= 1e-12 max(1, ||f||^2).
bool is_vanishing(const Ensemble& e, const Quantity& f);

/// Largest total dimension accepted by the tensor-power helpers.
inline constexpr std::size_t kMaxTensorDim = 4096;

/// The N-fold product ensemble. Gibbs ensembles come back in Density form.
Ensemble tensor_power(const Ensemble& e, int copies);
/// 1 (x) ... (x) f (x) ... (x) 1 with f in position `slot` (0-based) of `copies`.
Quantity slot_quantity(const Quantity& f, int slot, int copies);

struct MeanStatistics {
    double mean_expect = 0.0;
    double mean_sigma = 0.0;
};

/// <fbar> and sigma(fbar) for fbar = (1/N) sum_l f_l in the N-fold product
/// ensemble, with f_l the slot copies of a Hermitian f.
MeanStatistics tensor_power_mean(const Ensemble& e, const Quantity& f, int copies);

}  // namespace qalg
