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
#include <optional>
#include <string>
#include <vector>

#include "qalg/quantity.hpp"

namespace qalg {

struct AxiomResidual {
    std::string name;
    /// Worst relative residual over all samples. Order-type axioms
    /// (implications between inequalities) report the fraction of violated samples.
    double residual = 0.0;
};

struct AxiomReport {
    AlgebraContext ctx;
    int samples = 0;
    std::uint64_t seed = 0;
    double threshold = 1e-10;
    std::vector<AxiomResidual> entries;

    bool passed() const;
    /// Name of the first entry exceeding the threshold.
    std::optional<std::string> first_failure() const;
};

/// Randomized both-sides verification of the Q-algebra axioms (Q1)-(Q9), the
/// derived identities (e.p1)-(e.p8), and the C*-norm identities of the two
/// concrete realizations. Diagonal contexts also check commutativity.
AxiomReport check_qalgebra_axioms(const AlgebraContext& ctx, int samples, std::uint64_t seed);

}  // namespace qalg
