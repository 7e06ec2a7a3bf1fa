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

#include <utility>

#include "qalg/ensemble.hpp"

namespace qalg {

/// Both sides of an inequality and whether it holds at the stated slack.
struct InequalityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

/// sigma(f)^2 sigma(g)^2 >= cov(f,g)^2 + |<f*g - g*f>/2|^2, slack 1e-10 max(1, lhs, rhs).
/// Guaranteed for Hermitian f, g. With complex means the unshifted commutator
/// term can exceed the bound (f = i, g = 1 gives lhs 0, rhs 1).
InequalityCheck check_uncertainty_relation(const Ensemble& e, const Quantity& f, const Quantity& g);

/// |<f*g>|^2 <= <f*f><g*g>, slack 1e-10 max(1, lhs, rhs).
InequalityCheck check_cauchy_schwarz(const Ensemble& e, const Quantity& f, const Quantity& g);

struct GridSpec {
    double range = 0.0;
    int steps = 0;
};

/// Result of minimizing m(x,y) = lambda_min((f-x)^2 + (g-y)^2) over a box.
/// gamma > 0 certifies (f,g) complementary on the searched box; it is not a
/// proof of global optimality.
struct ComplementarityCertificate {
    double gamma = 0.0;
    double argmin_x = 0.0;
    double argmin_y = 0.0;
    GridSpec grid;
    bool refined = false;
    /// Smallest m(x,y) seen on the coarse grid, before refinement.
    double grid_minimum = 0.0;
};

/// m(x,y) = lambda_min((f-x)^2 + (g-y)^2) (min over points for Diagonal).
double complementarity_objective(const Quantity& f, const Quantity& g, double x, double y);

/// Coarse grid on [-range, range]^2 followed by coordinate descent with step
/// halving down to 1e-8 and an eigenvector fixed-point polish. `range <= 0`
/// selects 2(||f|| + ||g||) + 1, which always contains the minimizer.
/// Grid ties resolve to the lexicographically smallest (x, y).
ComplementarityCertificate certify_complementarity(const Quantity& f, const Quantity& g, double range = 0.0,
                                                   int coarse_steps = 61, bool refine = true);

/// n-level truncation of the canonical pair: q = sqrt(hbar/2)(a + a*),
/// p = i sqrt(hbar/2)(a* - a). [q,p] = i hbar (1 - n P_top).
std::pair<Quantity, Quantity> truncated_oscillator(int n, double hbar = 1.0);

}  // namespace qalg
