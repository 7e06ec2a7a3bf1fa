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

#include "qalg/bell.hpp"

#include <cmath>
#include <string>

#include "qalg/error.hpp"
#include "qalg/linalg.hpp"

namespace qalg {

ChshReport chsh(const Ensemble& e, const Quadruple& f) {
    for (std::size_t k = 0; k < 4; ++k) {
        require_same_context(e.ctx(), f[k].ctx(), "chsh");
        if (!is_hermitian(f[k])) {
            throw PreconditionError("chsh: f" + std::to_string(k + 1) + " is not Hermitian");
        }
        const Quantity one = Quantity::identity(f[k].ctx());
        if (!is_positive(one - f[k] * f[k])) {
            throw PreconditionError("chsh: f" + std::to_string(k + 1) + "^2 <= 1 violated");
        }
    }
    // Index pairs (j,k), 0-based: (1,2), (3,2), (3,4), (1,4).
    constexpr std::array<std::pair<int, int>, 4> pairs{{{0, 1}, {2, 1}, {2, 3}, {0, 3}}};
    ChshReport r;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto [j, k] = pairs[i];
        const Complex c = expectation(e, f[j] * f[k]);
        r.correlators[i] = c.real();
        r.imag_residual = std::max(r.imag_residual, std::abs(c.imag()));
    }
    if (r.imag_residual > 1e-10) {
        throw PreconditionError("chsh: correlator has imaginary part " + std::to_string(r.imag_residual) +
                                " > 1e-10; odd pairs must commute");
    }
    for (std::size_t k = 0; k < 4; ++k) {
        r.singles[k] = expectation(e, f[k]).real();
    }
    r.gamma = std::abs(r.correlators[0] + r.correlators[1] + r.correlators[2] - r.correlators[3]);
    r.tsirelson_ok = r.gamma <= kTsirelsonBound + 1e-9;
    r.classical_ok = r.gamma <= 2.0 + 1e-9;

    bool applicable = true;
    for (const auto& [j, k] : {std::pair(0, 1), std::pair(0, 3), std::pair(2, 1), std::pair(2, 3)}) {
        if (spectral_norm(commutator(f[j], f[k])) > 1e-10 || std::abs(covariance(e, f[j], f[k])) > 1e-10) {
            applicable = false;
        }
    }
    r.classical_bound_applicable = applicable;
    return r;
}

Spinpair build_spinpair() {
    const AlgebraContext ctx = AlgebraContext::matrix(4);
    CMatrix f1(4, 4), f2(4, 4), f3(4, 4), f4(4, 4);
    // f1 x = (x3, x4, x1, x2), f2 x = (x2, x1, x4, x3)
    f1 << 0, 0, 1, 0,  //
        0, 0, 0, 1,    //
        1, 0, 0, 0,    //
        0, 1, 0, 0;
    f2 << 0, 1, 0, 0,  //
        1, 0, 0, 0,    //
        0, 0, 0, 1,    //
        0, 0, 1, 0;
    f3 = CVector((Eigen::Vector4cd() << 1, 1, -1, -1).finished()).asDiagonal();
    f4 = CVector((Eigen::Vector4cd() << 1, -1, 1, -1).finished()).asDiagonal();

    const double a1 = std::sqrt((2.0 + std::sqrt(2.0)) / 8.0);
    const double a2 = std::sqrt((2.0 - std::sqrt(2.0)) / 8.0);
    // The sign sits on the third entry. With (a1, -a2, a2, a1) the correlators
    // <f3f2> and <f1f4> flip sign and the CHSH combination cancels to 0.
    CVector psi(4);
    psi << a1, a2, -a2, a1;

    Quadruple f{Quantity(ctx, f1), Quantity(ctx, f2), Quantity(ctx, f3), Quantity(ctx, f4)};

    // Tensor identities under the row-major flattening x = [[x1, x2], [x3, x4]].
    const CMatrix s1 = pauli::sigma1().data();
    const CMatrix s3 = pauli::sigma3().data();
    const CMatrix id = CMatrix::Identity(2, 2);
    const std::array<CMatrix, 4> expected{linalg::kron(s1, id), linalg::kron(id, s1), linalg::kron(s3, id),
                                          linalg::kron(id, s3)};
    for (std::size_t k = 0; k < 4; ++k) {
        if ((f[k].data() - expected[k]).cwiseAbs().maxCoeff() != 0.0) {
            throw Error("spinpair: f" + std::to_string(k + 1) + " does not match its Pauli tensor form");
        }
    }
    return {f, Ensemble::pure(ctx, psi)};
}

}  // namespace qalg
