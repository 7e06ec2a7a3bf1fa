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

#include "qalg/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qalg::linalg {

HermitianEigen eigh(const CMatrix& m) {
    const CMatrix sym = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix hermitian_function(const HermitianEigen& eig, const std::function<Complex(double)>& fn) {
    CVector d(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        d(i) = fn(eig.values(i));
    }
    return eig.vectors * d.asDiagonal() * eig.vectors.adjoint();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CVector kron(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

RVector singular_values(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues();
}

double largest_singular_value(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    const CMatrix gram = m.rows() >= m.cols() ? CMatrix(m.adjoint() * m) : CMatrix(m * m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double unitarity_residual(const CMatrix& m) {
    const auto id = CMatrix::Identity(m.rows(), m.cols());
    const double a = (m.adjoint() * m - id).norm();
    const double b = (m * m.adjoint() - id).norm();
    return std::max(a, b);
}

}  // namespace qalg::linalg
