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

#include "qalg/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qalg/error.hpp"
#include "qalg/linalg.hpp"

namespace qalg {

std::string to_string(EnsembleForm form) {
    switch (form) {
        case EnsembleForm::Weighted:
            return "weighted";
        case EnsembleForm::PureVector:
            return "pure";
        case EnsembleForm::Density:
            return "density";
        case EnsembleForm::Gibbs:
            return "gibbs";
    }
    return "unknown";
}

namespace {

constexpr double kRepairLimit = 1e-6;

void require_matrix_ctx(const AlgebraContext& ctx, const char* form) {
    if (ctx.is_diagonal()) {
        throw ContextMismatch(std::string(form) + " ensembles need a Matrix context; " + ctx.describe() +
                              " only admits weighted ensembles");
    }
}

void require_dim(const AlgebraContext& ctx, Eigen::Index rows, Eigen::Index cols, bool square, const char* what) {
    const auto n = static_cast<Eigen::Index>(ctx.dim);
    if (rows != n || cols != (square ? n : 1)) {
        std::ostringstream os;
        os << what << " has shape " << rows << "x" << cols << ", context is " << ctx.describe();
        throw ParseError(os.str());
    }
}

}  // namespace

Ensemble Ensemble::weighted(const AlgebraContext& ctx, const RVector& weights) {
    if (weights.size() != static_cast<Eigen::Index>(ctx.dim)) {
        throw ParseError("weighted ensemble needs " + std::to_string(ctx.dim) + " weights, got " +
                         std::to_string(weights.size()));
    }
    for (Eigen::Index k = 0; k < weights.size(); ++k) {
        if (!std::isfinite(weights(k)) || weights(k) < 0.0) {
            throw PreconditionError("weight " + std::to_string(k) + " is negative or not finite");
        }
    }
    const double total = weights.sum();
    if (!(total > 0.0)) {
        throw PreconditionError("weights sum to zero");
    }
    Ensemble e(ctx, EnsembleForm::Weighted);
    e.weights_ = weights / total;
    return e;
}

Ensemble Ensemble::pure(const AlgebraContext& ctx, const CVector& psi) {
    require_matrix_ctx(ctx, "pure");
    require_dim(ctx, psi.size(), 1, false, "psi");
    const double norm = psi.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kRepairLimit) {
        throw PreconditionError("psi must be a unit vector; |psi| = " + std::to_string(norm));
    }
    Ensemble e(ctx, EnsembleForm::PureVector);
    e.psi_ = psi / norm;
    return e;
}

Ensemble Ensemble::density(const AlgebraContext& ctx, const CMatrix& rho) {
    require_matrix_ctx(ctx, "density");
    require_dim(ctx, rho.rows(), rho.cols(), true, "rho");
    if (!rho.allFinite()) {
        throw ParseError("rho has non-finite entries");
    }
    DensityResiduals res;
    res.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const CMatrix sym = (rho + rho.adjoint()) / 2.0;
    const double tr = sym.trace().real();
    res.trace = std::abs(tr - 1.0);
    res.min_eigenvalue = linalg::eigh(sym).values(0);
    if (res.hermiticity > kRepairLimit || res.trace > kRepairLimit || res.min_eigenvalue < -kRepairLimit) {
        std::ostringstream os;
        os << "rho is not a density matrix: hermiticity residual " << res.hermiticity << ", trace residual "
           << res.trace << ", min eigenvalue " << res.min_eigenvalue;
        throw PreconditionError(os.str());
    }
    Ensemble e(ctx, EnsembleForm::Density);
    e.rho_ = sym / tr;
    e.residuals_ = res;
    return e;
}

Ensemble Ensemble::gibbs(const AlgebraContext& ctx, const CMatrix& entropy, double kbar) {
    require_matrix_ctx(ctx, "gibbs");
    require_dim(ctx, entropy.rows(), entropy.cols(), true, "S");
    if (!(kbar > 0.0) || !std::isfinite(kbar)) {
        throw PreconditionError("kbar must be positive");
    }
    if ((entropy - entropy.adjoint()).cwiseAbs().maxCoeff() > ctx.tol_herm * std::max(1.0, entropy.norm())) {
        throw PreconditionError("entropy S must be Hermitian");
    }
    const auto eig = linalg::eigh(entropy);
    // log Z by log-sum-exp over -lambda/kbar.
    const RVector scaled = -eig.values / kbar;
    const double top = scaled.maxCoeff();
    const double log_z = top + std::log((scaled.array() - top).exp().sum());

    Ensemble e(ctx, EnsembleForm::Gibbs);
    e.kbar_ = kbar;
    const auto n = static_cast<Eigen::Index>(ctx.dim);
    e.entropy_ = (entropy + entropy.adjoint()) / 2.0 + kbar * log_z * CMatrix::Identity(n, n);
    e.rho_ = linalg::hermitian_function(eig, [&](double lam) { return Complex(std::exp(-lam / kbar - log_z), 0.0); });
    return e;
}

CMatrix Ensemble::density_matrix() const {
    require_matrix_ctx(ctx_, "density_matrix:");
    switch (form_) {
        case EnsembleForm::Weighted:
            return weights_.cast<Complex>().asDiagonal();
        case EnsembleForm::PureVector:
            return psi_ * psi_.adjoint();
        default:
            return rho_;
    }
}

Complex expectation(const Ensemble& e, const Quantity& f) {
    require_same_context(e.ctx(), f.ctx(), "expectation");
    const CMatrix& d = f.data();
    switch (e.form()) {
        case EnsembleForm::Weighted:
            if (f.is_diagonal()) {
                return (e.weights().cast<Complex>().array() * d.col(0).array()).sum();
            }
            return (e.weights().cast<Complex>().array() * d.diagonal().array()).sum();
        case EnsembleForm::PureVector:
            return e.psi().dot(d * e.psi());
        case EnsembleForm::Density:
        case EnsembleForm::Gibbs:
            return e.rho().transpose().cwiseProduct(d).sum();
    }
    return 0.0;
}

Complex expectation_adjoint_product(const Ensemble& e, const Quantity& f, const Quantity& g) {
    require_same_context(e.ctx(), f.ctx(), "expectation");
    require_same_context(f.ctx(), g.ctx(), "expectation");
    const CMatrix& a = f.data();
    const CMatrix& b = g.data();
    switch (e.form()) {
        case EnsembleForm::Weighted:
            if (f.is_diagonal()) {
                return (e.weights().cast<Complex>().array() * a.col(0).array().conjugate() * b.col(0).array()).sum();
            } else {
                // (f* g)_kk = sum_j conj(f_jk) g_jk
                const CVector diag = a.cwiseProduct(b.conjugate()).colwise().sum().conjugate().transpose();
                return (e.weights().cast<Complex>().array() * diag.array()).sum();
            }
        case EnsembleForm::PureVector:
            return (a * e.psi()).dot(b * e.psi());
        case EnsembleForm::Density:
        case EnsembleForm::Gibbs:
            // tr(rho f* g) = tr(g rho f*) = sum_ij (g rho)_ij conj(f_ij)
            return (b * e.rho()).cwiseProduct(a.conjugate()).sum();
    }
    return 0.0;
}

double covariance(const Ensemble& e, const Quantity& f, const Quantity& g) {
    const Quantity fc = shift(f, -expectation(e, f));
    const Quantity gc = shift(g, -expectation(e, g));
    return expectation_adjoint_product(e, fc, gc).real();
}

double uncertainty(const Ensemble& e, const Quantity& f) {
    const double var = covariance(e, f, f);
    if (var >= 0.0) {
        return std::sqrt(var);
    }
    const double n = spectral_norm(f);
    if (var >= -1e-12 * std::max(1.0, n * n)) {
        return 0.0;
    }
    throw Error("broken ensemble: cov(f,f) = " + std::to_string(var) + " < 0");
}

bool is_vanishing(const Ensemble& e, const Quantity& f) {
    const double n = spectral_norm(f);
    return std::abs(expectation_adjoint_product(e, f, f)) <= 1e-12 * std::max(1.0, n * n);
}

namespace {

std::size_t checked_power_dim(std::size_t dim, int copies) {
    if (copies < 1 || copies > 6) {
        throw PreconditionError("tensor copies must be in 1..6, got " + std::to_string(copies));
    }
    std::size_t total = 1;
    for (int k = 0; k < copies; ++k) {
        total *= dim;
        if (total > kMaxTensorDim) {
            throw PreconditionError("tensor dimension overflow: " + std::to_string(dim) + "^" +
                                    std::to_string(copies) + " exceeds " + std::to_string(kMaxTensorDim));
        }
    }
    return total;
}

}  // namespace

Ensemble tensor_power(const Ensemble& e, int copies) {
    const std::size_t total = checked_power_dim(e.ctx().dim, copies);
    const AlgebraContext ctx(e.ctx().kind, total, e.ctx().tol_herm, e.ctx().tol_psd);
    switch (e.form()) {
        case EnsembleForm::Weighted: {
            CVector w = e.weights().cast<Complex>();
            CVector acc = w;
            for (int k = 1; k < copies; ++k) acc = linalg::kron(acc, w);
            return Ensemble::weighted(ctx, acc.real());
        }
        case EnsembleForm::PureVector: {
            CVector acc = e.psi();
            for (int k = 1; k < copies; ++k) acc = linalg::kron(acc, e.psi());
            return Ensemble::pure(ctx, acc);
        }
        case EnsembleForm::Density:
        case EnsembleForm::Gibbs: {
            CMatrix acc = e.rho();
            for (int k = 1; k < copies; ++k) acc = linalg::kron(acc, e.rho());
            return Ensemble::density(ctx, acc);
        }
    }
    throw Error("unreachable ensemble form");
}

Quantity slot_quantity(const Quantity& f, int slot, int copies) {
    const std::size_t total = checked_power_dim(f.dim(), copies);
    if (slot < 0 || slot >= copies) {
        throw PreconditionError("slot " + std::to_string(slot) + " out of range for " + std::to_string(copies) +
                                " copies");
    }
    const AlgebraContext ctx(f.ctx().kind, total, f.ctx().tol_herm, f.ctx().tol_psd);
    const auto n = static_cast<Eigen::Index>(f.dim());
    if (f.is_diagonal()) {
        CVector acc = CVector::Ones(1);
        for (int k = 0; k < copies; ++k) {
            acc = linalg::kron(acc, k == slot ? CVector(f.data().col(0)) : CVector(CVector::Ones(n)));
        }
        return Quantity(ctx, acc);
    }
    CMatrix acc = CMatrix::Identity(1, 1);
    for (int k = 0; k < copies; ++k) {
        acc = linalg::kron(acc, k == slot ? f.data() : CMatrix(CMatrix::Identity(n, n)));
    }
    return Quantity(ctx, acc);
}

MeanStatistics tensor_power_mean(const Ensemble& e, const Quantity& f, int copies) {
    require_same_context(e.ctx(), f.ctx(), "tensor_power_mean");
    if (!is_hermitian(f)) {
        throw PreconditionError("tensor_power_mean requires a Hermitian quantity");
    }
    const Ensemble big = tensor_power(e, copies);
    CMatrix sum = slot_quantity(f, 0, copies).data();
    for (int l = 1; l < copies; ++l) {
        sum += slot_quantity(f, l, copies).data();
    }
    const Quantity mean(big.ctx(), CMatrix(sum / static_cast<double>(copies)));
    return {expectation(big, mean).real(), uncertainty(big, mean)};
}

}  // namespace qalg
