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

#include <cstdint>
#include <random>

#include "qalg/quantity.hpp"

namespace qalg::random {

using Engine = std::mt19937_64;

/// Seeded generators shared by the axiom checker, the CLI and the test suites.
/// Gaussian entries have unit variance per complex entry.
Complex gaussian_complex(Engine& rng);
CMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Engine& rng);
CVector unit_vector(std::size_t n, Engine& rng);
CMatrix unitary(std::size_t n, Engine& rng);

/// Random element of `ctx` (non-Hermitian in general).
Quantity quantity(const AlgebraContext& ctx, Engine& rng);
Quantity hermitian(const AlgebraContext& ctx, Engine& rng);
/// Random positive semidefinite quantity g*g.
Quantity positive(const AlgebraContext& ctx, Engine& rng);
/// Hermitian with eigenvalues uniform in [0,1].
Quantity effect(const AlgebraContext& ctx, Engine& rng);
/// Random orthogonal projector of the given rank.
Quantity event(const AlgebraContext& ctx, std::size_t rank, Engine& rng);

/// Full-rank density matrix (trace 1), or lower rank when rank < n.
CMatrix density(std::size_t n, Engine& rng, std::size_t rank = 0);
/// Probability vector drawn from a flat Dirichlet distribution.
RVector weights(std::size_t n, Engine& rng);

}  // namespace qalg::random
