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

#include <cmath>

#include "gtest/gtest.h"
#include "qalg/bell.hpp"
#include "qalg/error.hpp"
#include "qalg/linalg.hpp"
#include "test_util.hpp"

using namespace qalg;
using namespace qalg_test;

namespace {

const AlgebraContext kC4 = AlgebraContext::matrix(4);

/// psi^T f_j f_k psi with naive products (real vectors, real matrices).
double naive_correlator(const CVector& psi, const Quantity& a, const Quantity& b) {
    return psi.dot(naive_product(a.data(), b.data()) * psi).real();
}

/// Hermitian 2x2 with spectral norm at most 1.
CMatrix contraction(random::Engine& g) {
    const CMatrix h = random::hermitian(AlgebraContext::matrix(2), g).data();
    return h / std::max(1.0, Eigen::SelfAdjointEigenSolver<CMatrix>(h).eigenvalues().cwiseAbs().maxCoeff());
}

/// A x 1 or 1 x B on C^2 (x) C^2 with random contractions A, B.
Quadruple bipartite_quadruple(random::Engine& g) {
    const CMatrix id = CMatrix::Identity(2, 2);
    return {Quantity(kC4, linalg::kron(contraction(g), id)), Quantity(kC4, linalg::kron(id, contraction(g))),
            Quantity(kC4, linalg::kron(contraction(g), id)), Quantity(kC4, linalg::kron(id, contraction(g)))};
}

}  // namespace

TEST(build_spinpair, matrices_and_state) {
    const Spinpair sp = build_spinpair();
    for (const Quantity& f : sp.f) {
        EXPECT_TRUE(is_hermitian(f));
        EXPECT_EQ(diff(f * f, Quantity::identity(kC4)), 0.0);
    }
    for (auto [j, k] : {std::pair(0, 1), std::pair(0, 3), std::pair(2, 1), std::pair(2, 3)}) {
        EXPECT_EQ(spectral_norm(commutator(sp.f[j], sp.f[k])), 0.0);
    }
    // f1 x = (x3, x4, x1, x2)
    const CVector x = vec({1, 2, 3, 4});
    EXPECT_EQ(diff(sp.f[0].data() * x, vec({3, 4, 1, 2})), 0.0);
    EXPECT_EQ(diff(sp.f[1].data() * x, vec({2, 1, 4, 3})), 0.0);
    EXPECT_EQ(diff(sp.f[2].data() * x, vec({1, 2, -3, -4})), 0.0);
    EXPECT_EQ(diff(sp.f[3].data() * x, vec({1, -2, 3, -4})), 0.0);
    EXPECT_NEAR(sp.psi.psi().norm(), 1.0, 1e-15);
}

TEST(build_spinpair, correlators_from_independent_products) {
    const Spinpair sp = build_spinpair();
    const CVector& psi = sp.psi.psi();
    const double h = std::sqrt(2.0) / 2;
    EXPECT_NEAR(naive_correlator(psi, sp.f[0], sp.f[1]), h, 1e-15);
    EXPECT_NEAR(naive_correlator(psi, sp.f[2], sp.f[1]), h, 1e-15);
    EXPECT_NEAR(naive_correlator(psi, sp.f[2], sp.f[3]), h, 1e-15);
    EXPECT_NEAR(naive_correlator(psi, sp.f[0], sp.f[3]), -h, 1e-15);
}

TEST(chsh, spinpair_saturates_the_quantum_bound) {
    const Spinpair sp = build_spinpair();
    const ChshReport r = chsh(sp.psi, sp.f);
    const double h = std::sqrt(2.0) / 2;
    const double expected[4] = {h, h, h, -h};
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(r.correlators[k], expected[k], 1e-10);
        EXPECT_NEAR(r.singles[k], 0.0, 1e-12);
    }
    EXPECT_NEAR(r.gamma, 2 * std::sqrt(2.0), 1e-10);
    EXPECT_TRUE(r.tsirelson_ok);
    EXPECT_FALSE(r.classical_ok);
    EXPECT_FALSE(r.classical_bound_applicable);
    const double recomputed = std::abs(r.correlators[0] + r.correlators[1] + r.correlators[2] - r.correlators[3]);
    EXPECT_NEAR(r.gamma, recomputed, 1e-12);
}

TEST(chsh, spinpair_odd_pairs_are_correlated) {
    const Spinpair sp = build_spinpair();
    for (auto [j, k] : {std::pair(0, 1), std::pair(0, 3), std::pair(2, 1), std::pair(2, 3)}) {
        EXPECT_NEAR(std::abs(covariance(sp.psi, sp.f[j], sp.f[k])), std::sqrt(2.0) / 2, 1e-12);
    }
}

TEST(chsh, sign_placement_in_the_entangled_vector_matters) {
    // Moving the minus sign to the second entry flips <f3f2> and <f1f4>,
    // and the four terms cancel.
    const Spinpair sp = build_spinpair();
    const double a1 = std::sqrt((2 + std::sqrt(2.0)) / 8), a2 = std::sqrt((2 - std::sqrt(2.0)) / 8);
    const Ensemble other = Ensemble::pure(kC4, vec({a1, -a2, a2, a1}));
    const ChshReport r = chsh(other, sp.f);
    EXPECT_NEAR(r.correlators[1], -std::sqrt(2.0) / 2, 1e-12);
    EXPECT_NEAR(r.correlators[3], std::sqrt(2.0) / 2, 1e-12);
    EXPECT_NEAR(r.gamma, 0.0, 1e-12);
}

TEST(chsh, product_state) {
    const Spinpair sp = build_spinpair();
    const ChshReport r = chsh(Ensemble::pure(kC4, vec({1, 0, 0, 0})), sp.f);
    EXPECT_NEAR(r.correlators[0], 0.0, 1e-15);
    EXPECT_NEAR(r.correlators[1], 0.0, 1e-15);
    EXPECT_NEAR(r.correlators[2], 1.0, 1e-15);
    EXPECT_NEAR(r.correlators[3], 0.0, 1e-15);
    EXPECT_NEAR(r.gamma, 1.0, 1e-15);
    EXPECT_TRUE(r.classical_bound_applicable);
    EXPECT_TRUE(r.classical_ok);
}

TEST(chsh, identity_quadruple_sits_on_the_classical_boundary) {
    auto g = rng(300);
    const Quantity one = Quantity::identity(kC4);
    const ChshReport r = chsh(Ensemble::density(kC4, random::density(4, g)), {one, one, one, one});
    EXPECT_NEAR(r.gamma, 2.0, 1e-14);
    EXPECT_TRUE(r.classical_bound_applicable);
    EXPECT_TRUE(r.classical_ok);
}

TEST(chsh, preconditions) {
    const Spinpair sp = build_spinpair();
    Quadruple big = sp.f;
    big[2] = 1.01 * big[2];
    EXPECT_THROW(chsh(sp.psi, big), PreconditionError);
    Quadruple skew = sp.f;
    skew[0] = scale({0, 1}, skew[0]);
    EXPECT_THROW(chsh(sp.psi, skew), PreconditionError);
    const Quantity s = pauli::sigma1();
    EXPECT_THROW(chsh(sp.psi, {s, s, s, s}), ContextMismatch);
    // Noncommuting odd pairs give complex correlators and are rejected.
    const Quantity x = Quantity(kC4, linalg::kron(pauli::sigma1().data(), CMatrix::Identity(2, 2)));
    const Quantity y = Quantity(kC4, linalg::kron(pauli::sigma2().data(), CMatrix::Identity(2, 2)));
    auto g = rng(301);
    EXPECT_THROW(chsh(Ensemble::pure(kC4, random::unit_vector(4, g)), {x, y, x, y}), PreconditionError);
}

TEST(chsh_properties, tsirelson_bound_on_random_bipartite_quadruples) {
    auto g = rng(302);
    for (int k = 0; k < 1000; ++k) {
        const ChshReport r = chsh(Ensemble::density(kC4, random::density(4, g)), bipartite_quadruple(g));
        ASSERT_LE(r.gamma, 2 * std::sqrt(2.0) + 1e-9);
        ASSERT_TRUE(r.tsirelson_ok);
    }
}

TEST(chsh_properties, complex_combination_bounded_without_commutation) {
    // |<f1f2> + <f3f2> + <f3f4> - <f1f4>| <= 2 sqrt 2 holds for any Hermitian
    // contractions, with the correlators taken as complex numbers.
    auto g = rng(303);
    for (int k = 0; k < 1000; ++k) {
        std::array<Quantity, 4> f{Quantity::zero(kC4), Quantity::zero(kC4), Quantity::zero(kC4), Quantity::zero(kC4)};
        for (auto& q : f) {
            const Quantity h = random::hermitian(kC4, g);
            q = scale(1.0 / spectral_norm(h), h);
        }
        const Ensemble e = Ensemble::density(kC4, random::density(4, g));
        const Complex s = expectation(e, f[0] * f[1]) + expectation(e, f[2] * f[1]) + expectation(e, f[2] * f[3]) -
                          expectation(e, f[0] * f[3]);
        ASSERT_LE(std::abs(s), 2 * std::sqrt(2.0) + 1e-9);
    }
}

TEST(chsh_properties, classical_bound_on_product_constructions) {
    auto g = rng(304);
    const std::size_t na = 3, nb = 3;
    const AlgebraContext ctx = AlgebraContext::diagonal(na * nb);
    for (int k = 0; k < 1000; ++k) {
        const RVector pa = random::weights(na, g), pb = random::weights(nb, g);
        std::array<CVector, 4> v;
        for (auto& x : v) x.resize(na * nb);
        std::array<RVector, 4> local{RVector(na), RVector(nb), RVector(na), RVector(nb)};
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        for (auto& l : local)
            for (Eigen::Index i = 0; i < l.size(); ++i) l(i) = unit(g);
        RVector p(na * nb);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < nb; ++b) {
                const std::size_t w = a * nb + b;
                p(w) = pa(a) * pb(b);
                v[0](w) = local[0](a);
                v[1](w) = local[1](b);
                v[2](w) = local[2](a);
                v[3](w) = local[3](b);
            }
        const Ensemble e = Ensemble::weighted(ctx, p);
        const ChshReport r =
            chsh(e, {Quantity(ctx, v[0]), Quantity(ctx, v[1]), Quantity(ctx, v[2]), Quantity(ctx, v[3])});
        ASSERT_TRUE(r.classical_bound_applicable);
        ASSERT_LE(r.gamma, 2.0 + 1e-9);
    }
}
