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

#include <Eigen/SVD>

#include "gtest/gtest.h"
#include "qalg/axioms.hpp"
#include "qalg/error.hpp"
#include "qalg/linalg.hpp"
#include "test_util.hpp"

using namespace qalg;
using namespace qalg_test;

TEST(context, validates_dimension_and_tolerances) {
    EXPECT_THROW(AlgebraContext(Kind::Matrix, 0), PreconditionError);
    EXPECT_THROW(AlgebraContext(Kind::Matrix, 2, 0.0, 1e-10), PreconditionError);
    EXPECT_THROW(AlgebraContext(Kind::Diagonal, 2, 1e-10, -1.0), PreconditionError);
    EXPECT_EQ(AlgebraContext::matrix(4).describe(), "Matrix(4)");
    EXPECT_TRUE(AlgebraContext::diagonal(3).compatible(AlgebraContext(Kind::Diagonal, 3, 1e-6, 1e-6)));
    EXPECT_FALSE(AlgebraContext::diagonal(3).compatible(AlgebraContext::matrix(3)));
}

TEST(quantity, rejects_bad_shapes_and_nonfinite_entries) {
    EXPECT_THROW(Quantity(AlgebraContext::matrix(2), CMatrix(CMatrix::Zero(3, 3))), ParseError);
    EXPECT_THROW(Quantity(AlgebraContext::diagonal(3), CVector(CVector::Zero(2))), ParseError);
    CMatrix m = CMatrix::Zero(2, 2);
    m(1, 0) = Complex(std::nan(""), 0.0);
    try {
        Quantity(AlgebraContext::matrix(2), m);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos) << e.what();
    }
}

TEST(quantity, mixing_contexts_is_rejected) {
    const Quantity a = Quantity::identity(AlgebraContext::matrix(2));
    const Quantity b = Quantity::identity(AlgebraContext::diagonal(2));
    EXPECT_THROW(a + b, ContextMismatch);
    EXPECT_THROW(a * Quantity::identity(AlgebraContext::matrix(3)), ContextMismatch);
    EXPECT_THROW(commutator(a, b), ContextMismatch);
    EXPECT_THROW(leq(a, b), ContextMismatch);
}

TEST(add, examples) {
    auto g = rng(1);
    const AlgebraContext ctx = AlgebraContext::matrix(3);
    const Quantity f = random::quantity(ctx, g);
    EXPECT_EQ(diff(f + Quantity::zero(ctx), f), 0.0);
    EXPECT_EQ(diff(pauli::sigma1() + pauli::sigma1(), 2.0 * pauli::sigma1()), 0.0);
    const Quantity a = random::quantity(ctx, g), b = random::quantity(ctx, g);
    EXPECT_LE(diff((f + a) + b, f + (a + b)), 1e-14);
    EXPECT_EQ(diff(f + a, a + f), 0.0);
}

TEST(mul, examples) {
    EXPECT_EQ(diff((pauli::sigma1() * pauli::sigma3()).data(), square({0, -1, 1, 0})), 0.0);
    auto g = rng(2);
    const Quantity f = random::quantity(AlgebraContext::matrix(3), g);
    EXPECT_EQ(diff(Quantity::identity(f.ctx()) * f, f), 0.0);
    const Quantity d = Quantity::from_values(vec({1, 2})) * Quantity::from_values(vec({3, 4}));
    EXPECT_EQ(diff(d.data(), vec({3, 8})), 0.0);
}

TEST(mul, matches_naive_product) {
    auto g = rng(3);
    const AlgebraContext ctx = AlgebraContext::matrix(5);
    for (int k = 0; k < 20; ++k) {
        const Quantity a = random::quantity(ctx, g), b = random::quantity(ctx, g);
        EXPECT_LE(diff((a * b).data(), naive_product(a.data(), b.data())), 1e-12);
    }
}

TEST(adjoint, examples) {
    EXPECT_EQ(diff(adjoint(pauli::sigma1()), pauli::sigma1()), 0.0);
    const AlgebraContext ctx = AlgebraContext::matrix(2);
    EXPECT_EQ(diff(adjoint(Quantity::scalar(ctx, {0, 1})), Quantity::scalar(ctx, {0, -1})), 0.0);
    auto g = rng(4);
    const AlgebraContext c3 = AlgebraContext::matrix(3);
    for (int k = 0; k < 50; ++k) {
        const Quantity f = random::quantity(c3, g), h = random::quantity(c3, g);
        EXPECT_LE(diff(adjoint(f * h), adjoint(h) * adjoint(f)), 1e-14);
        EXPECT_EQ(diff(adjoint(adjoint(f)), f), 0.0);  // involution is exact
    }
    const Quantity d = Quantity::from_values(vec({{1, 2}, {3, -4}}));
    EXPECT_EQ(diff(adjoint(d).data(), vec({{1, -2}, {3, 4}})), 0.0);
}

TEST(commutator, examples) {
    EXPECT_EQ(diff(commutator(pauli::sigma1(), pauli::sigma3()).data(), square({0, -2, 2, 0})), 0.0);
    auto g = rng(5);
    const Quantity f = random::quantity(AlgebraContext::matrix(3), g);
    EXPECT_LE(spectral_norm(commutator(f, f)), 1e-14);
    const AlgebraContext d = AlgebraContext::diagonal(6);
    EXPECT_EQ(spectral_norm(commutator(random::quantity(d, g), random::quantity(d, g))), 0.0);
}

TEST(re_im_parts, examples_and_normality) {
    auto g = rng(6);
    const AlgebraContext ctx = AlgebraContext::matrix(3);
    const Quantity h = random::hermitian(ctx, g);
    EXPECT_LE(spectral_norm(im_part(h)), 1e-15);
    const Quantity is1 = scale({0, 1}, pauli::sigma1());
    EXPECT_LE(spectral_norm(re_part(is1)), 1e-15);
    EXPECT_LE(diff(im_part(is1), pauli::sigma1()), 1e-15);
    for (int k = 0; k < 50; ++k) {
        const Quantity f = random::quantity(ctx, g);
        EXPECT_TRUE(is_hermitian(re_part(f)));
        EXPECT_TRUE(is_hermitian(im_part(f)));
        EXPECT_LE(diff(re_part(f) + scale({0, 1}, im_part(f)), f), 1e-14);
        // [f, f*] = -2i [Re f, Im f]
        const Quantity lhs = commutator(f, adjoint(f));
        const Quantity rhs = scale({0, -2}, commutator(re_part(f), im_part(f)));
        EXPECT_LE(diff(lhs, rhs), 1e-12 * std::max(1.0, spectral_norm(lhs)));
    }
    // A normal non-Hermitian element: Re and Im commute.
    const CMatrix u = random::unitary(3, g);
    const Quantity n(ctx, CMatrix(u * vec({{1, 2}, {-1, 0.5}, {0, -3}}).asDiagonal() * u.adjoint()));
    EXPECT_TRUE(is_normal(n));
    EXPECT_LE(spectral_norm(commutator(re_part(n), im_part(n))), 1e-12);
    EXPECT_FALSE(is_normal(random::quantity(ctx, g)));
}

TEST(spectral_norm, examples) {
    EXPECT_NEAR(spectral_norm(pauli::sigma1()), 1.0, 1e-15);
    const AlgebraContext ctx = AlgebraContext::matrix(3);
    EXPECT_NEAR(spectral_norm(Quantity::scalar(ctx, {3, -4})), 5.0, 1e-14);
    EXPECT_EQ(spectral_norm(Quantity::from_values(vec({1, {0, -7}, 2}))), 7.0);
    auto g = rng(7);
    for (int k = 0; k < 100; ++k) {
        const Quantity f = random::quantity(ctx, g), h = random::quantity(ctx, g);
        EXPECT_LE(spectral_norm(f * h), spectral_norm(f) * spectral_norm(h) + 1e-12);
    }
}

TEST(spectral_norm, matches_largest_singular_value) {
    auto g = rng(8);
    for (int k = 0; k < 40; ++k) {
        const auto n = static_cast<std::size_t>(1 + k % 7);
        const Quantity f = random::quantity(AlgebraContext::matrix(n), g);
        const double oracle = Eigen::JacobiSVD<CMatrix>(f.data()).singularValues()(0);
        EXPECT_NEAR(spectral_norm(f), oracle, 1e-12 * oracle);
    }
}

TEST(is_positive, examples) {
    const AlgebraContext ctx = AlgebraContext::matrix(3);
    EXPECT_TRUE(is_positive(Quantity::identity(ctx)));
    EXPECT_FALSE(is_positive(-Quantity::identity(ctx)));
    auto g = rng(9);
    for (int k = 0; k < 50; ++k) {
        const Quantity f = random::quantity(ctx, g);
        EXPECT_TRUE(is_positive(adjoint(f) * f));
    }
    // Q8 first clause: positive elements are Hermitian.
    EXPECT_FALSE(is_positive(Quantity::from_matrix(square({1, 1, 0, 1}))));
    EXPECT_TRUE(is_positive(Quantity::from_values(vec({0, 2, 1e-12}))));
    EXPECT_FALSE(is_positive(Quantity::from_values(vec({0, {1, 1e-3}}))));
    EXPECT_FALSE(is_positive(Quantity::from_values(vec({1, -1e-6}))));
}

TEST(leq, examples) {
    auto g = rng(10);
    const AlgebraContext ctx = AlgebraContext::matrix(3);
    const Quantity e = random::effect(ctx, g);
    EXPECT_TRUE(leq(Quantity::zero(ctx), e));
    EXPECT_TRUE(leq(e, Quantity::identity(ctx)));
    EXPECT_FALSE(leq(pauli::sigma1(), pauli::sigma3()));
    EXPECT_FALSE(leq(pauli::sigma3(), pauli::sigma1()));
    // Conjugation monotony.
    for (int k = 0; k < 50; ++k) {
        const Quantity f = random::hermitian(ctx, g);
        const Quantity gg = f + random::positive(ctx, g);
        const Quantity h = random::quantity(ctx, g);
        ASSERT_TRUE(leq(f, gg));
        EXPECT_TRUE(leq(adjoint(h) * f * h, adjoint(h) * gg * h));
    }
}

TEST(power, examples) {
    EXPECT_LE(diff(power(pauli::sigma1(), 2), pauli::id2()), 1e-15);
    auto g = rng(11);
    const Quantity f = random::quantity(AlgebraContext::matrix(3), g);
    EXPECT_EQ(diff(power(f, 0), Quantity::identity(f.ctx())), 0.0);
    EXPECT_EQ(diff(power(f, 1), f), 0.0);
    EXPECT_LE(diff(power(f, 3), f * f * f), 1e-12);
}

TEST(qalgebra_properties, scalar_embedding_is_a_homomorphism) {
    const AlgebraContext ctx = AlgebraContext::matrix(3);
    auto g = rng(12);
    for (int k = 0; k < 20; ++k) {
        const Complex a = random::gaussian_complex(g), b = random::gaussian_complex(g);
        const Quantity qa = Quantity::scalar(ctx, a), qb = Quantity::scalar(ctx, b);
        EXPECT_LE(diff(qa + qb, Quantity::scalar(ctx, a + b)), 1e-15);
        EXPECT_LE(diff(qa * qb, Quantity::scalar(ctx, a * b)), 1e-15);
        EXPECT_LE(diff(adjoint(qa), Quantity::scalar(ctx, std::conj(a))), 0.0);
    }
}

TEST(qalgebra_properties, cauchy_schwarz_operator_form) {
    // 2 ||f|| ||g|| - (f*g + g*f) >= 0
    auto g = rng(13);
    const AlgebraContext ctx = AlgebraContext::matrix(4);
    for (int k = 0; k < 100; ++k) {
        const Quantity f = random::quantity(ctx, g), h = random::quantity(ctx, g);
        const double scale = 2.0 * spectral_norm(f) * spectral_norm(h);
        const Quantity m = Quantity::scalar(ctx, scale) - (adjoint(f) * h + adjoint(h) * f);
        EXPECT_GE(hermitian_eigenvalues(m).minCoeff(), -1e-10 * scale);
    }
}

TEST(qalgebra_properties, zero_norm_means_zero) {
    const AlgebraContext ctx = AlgebraContext::matrix(3);
    EXPECT_EQ(spectral_norm(Quantity::zero(ctx)), 0.0);
    auto g = rng(14);
    for (int k = 0; k < 20; ++k) EXPECT_GT(spectral_norm(random::quantity(ctx, g)), 0.0);
}

TEST(qalgebra_properties, norm_identities_of_the_realizations) {
    auto g = rng(15);
    for (const AlgebraContext& ctx : {AlgebraContext::matrix(4), AlgebraContext::diagonal(7)}) {
        for (int k = 0; k < 50; ++k) {
            const Quantity f = random::quantity(ctx, g);
            const double n = spectral_norm(f);
            EXPECT_NEAR(spectral_norm(adjoint(f)), n, 1e-12 * n);
            EXPECT_NEAR(spectral_norm(adjoint(f) * f), n * n, 1e-12 * n * n);
        }
    }
}

TEST(qalgebra_properties, squares_are_monotone_on_diagonal_algebra) {
    auto g = rng(16);
    const AlgebraContext ctx = AlgebraContext::diagonal(8);
    for (int k = 0; k < 100; ++k) {
        const Quantity f = random::positive(ctx, g);
        const Quantity h = f + random::positive(ctx, g);
        EXPECT_TRUE(leq(f * f, h * h));
    }
}

TEST(qalgebra_properties, squares_are_not_monotone_on_matrices) {
    // 0 <= f <= g does not give f^2 <= g^2 for matrices.
    const Quantity f = mat({1, 0, 0, 0});
    const Quantity g = mat({2, 1, 1, 1});
    ASSERT_TRUE(leq(Quantity::zero(f.ctx()), f));
    ASSERT_TRUE(leq(f, g));
    EXPECT_FALSE(leq(f * f, g * g));
    EXPECT_NEAR((g * g - f * f).data().determinant().real(), -1.0, 1e-14);
}

TEST(axioms, matrix_and_diagonal_contexts_pass) {
    const AxiomReport m = check_qalgebra_axioms(AlgebraContext::matrix(4), 100, 7);
    EXPECT_TRUE(m.passed()) << *m.first_failure();
    const AxiomReport d = check_qalgebra_axioms(AlgebraContext::diagonal(8), 100, 7);
    EXPECT_TRUE(d.passed()) << *d.first_failure();
    bool has_commutative = false;
    for (const auto& e : d.entries) has_commutative |= e.name == "commutative";
    EXPECT_TRUE(has_commutative);
    EXPECT_EQ(m.entries.size() + 1, d.entries.size());
}

TEST(axioms, is_deterministic_in_seed) {
    const AxiomReport a = check_qalgebra_axioms(AlgebraContext::matrix(3), 20, 99);
    const AxiomReport b = check_qalgebra_axioms(AlgebraContext::matrix(3), 20, 99);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t k = 0; k < a.entries.size(); ++k) EXPECT_EQ(a.entries[k].residual, b.entries[k].residual);
}

TEST(axioms, rejects_zero_samples) {
    EXPECT_THROW(check_qalgebra_axioms(AlgebraContext::matrix(2), 0, 1), PreconditionError);
}

TEST(linalg, kron_matches_definition) {
    auto g = rng(17);
    const CMatrix a = random::gaussian_matrix(2, 3, g), b = random::gaussian_matrix(3, 2, g);
    const CMatrix k = linalg::kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 2; ++c) EXPECT_EQ(k(i * 3 + r, j * 2 + c), a(i, j) * b(r, c));
}

TEST(linalg, random_unitary_is_unitary) {
    auto g = rng(18);
    for (int n : {1, 2, 5, 9}) EXPECT_LE(linalg::unitarity_residual(random::unitary(n, g)), 1e-13);
}
