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

#include <array>

#include "qalg/ensemble.hpp"

namespace qalg {

using Quadruple = std::array<Quantity, 4>;

inline constexpr double kTsirelsonBound = 2.8284271247461900976;  // 2 sqrt(2)

struct ChshReport {
    /// <f1f2>, <f3f2>, <f3f4>, <f1f4> (real parts).
    std::array<double, 4> correlators{};
    /// <f_k>, k = 1..4 (real parts).
    std::array<double, 4> singles{};
    double gamma = 0.0;
    bool tsirelson_ok = false;
    /// Odd pairs commute and are uncorrelated (both within 1e-10).
    bool classical_bound_applicable = false;
    bool classical_ok = false;
    /// Largest |Im <f_j f_k>| over the four correlators.
    double imag_residual = 0.0;
};

/// Evaluates |<f1f2> + <f3f2> + <f3f4> - <f1f4>| for Hermitian f_k with
/// f_k^2 <= 1. Throws PreconditionError when f_k^2 <= 1 fails or when a
/// correlator has an imaginary part above 1e-10 (noncommuting odd pairs).
ChshReport chsh(const Ensemble& e, const Quadruple& f);

struct Spinpair {
    Quadruple f;
    Ensemble psi;
};

/// The four 4x4 monomial matrices f1 = s1 (x) 1, f2 = 1 (x) s1, f3 = s3 (x) 1,
/// f4 = 1 (x) s3 together with the pure ensemble
/// psi = (a1, a2, -a2, a1), a_{1,2} = sqrt((2 +- sqrt 2)/8), which saturates
/// the Tsirelson bound.
Spinpair build_spinpair();

}  // namespace qalg
