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
#include <vector>

#include "qalg/ensemble.hpp"

namespace qalg {

/// Tolerance used by the Effect/Event constructors and the commutation test.
inline constexpr double kLogicTol = 1e-10;

/// A quantity with 0 <= e <= 1. Construction validates and never repairs.
class Effect {
   public:
    explicit Effect(Quantity q);

    const Quantity& quantity() const { return q_; }
    const AlgebraContext& ctx() const { return q_.ctx(); }
    /// True when e^2 = e = e* within kLogicTol.
    bool is_event() const;

    /// max(||e - e*||, -lambda_min, lambda_max - 1) for any quantity.
    static double residual(const Quantity& q);

   private:
    Quantity q_;
};

/// An effect with e^2 = e = e*.
class Event {
   public:
    explicit Event(Quantity q);
    explicit Event(Effect e);

    const Effect& effect() const { return e_; }
    const Quantity& quantity() const { return e_.quantity(); }
    operator const Effect&() const { return e_; }

    /// max(||e^2 - e||, ||e - e*||).
    static double residual(const Quantity& q);

   private:
    Effect e_;
};

/// <e>, real, in [-1e-10, 1 + 1e-10].
double probability(const Ensemble& ens, const Effect& e);

Effect negate(const Effect& e);
Event negate(const Event& e);

struct AndOr {
    Effect conj;  // e ^ e' = e e'
    Effect disj;  // e v e' = e + e' - e e'
};

struct EventAndOr {
    Event conj;
    Event disj;
};

/// Requires ||[e, e']|| <= 1e-10; for noncommuting effects "and"/"or" are
/// undefined and PreconditionError reports the commutator norm.
AndOr and_or(const Effect& e, const Effect& e2);
EventAndOr and_or(const Event& e, const Event& e2);

/// |<e e'> - <e><e'>| <= 1e-10 (commuting effects only).
bool is_independent(const Ensemble& ens, const Effect& e, const Effect& e2);

struct Alternative {
    std::vector<Effect> members;
};

struct AlternativeReport {
    /// max(0, lambda_max(sum) - 1).
    double sum_excess = 0.0;
    bool sum_ok = false;
    bool all_events = false;
    /// Worst ||e_k e_l|| over member pairs (checked when all members are events).
    double max_overlap = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> overlapping;
    bool valid = false;
};

AlternativeReport check_alternative(const Alternative& a);

/// Relative frequency q = (1/N) sum_l e_l of slot copies of e in the N-fold
/// product ensemble. For events sigma(q) = sqrt(p(1-p)/N).
MeanStatistics relative_frequency(const Ensemble& ens, const Effect& e, int copies);

}  // namespace qalg
