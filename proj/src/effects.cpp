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

#include "qalg/effects.hpp"

#include <algorithm>
#include <sstream>

#include "qalg/error.hpp"

namespace qalg {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

void require_commuting(const Quantity& a, const Quantity& b) {
    require_same_context(a.ctx(), b.ctx(), "and_or");
    const double c = spectral_norm(commutator(a, b));
    if (c > kLogicTol) {
        throw PreconditionError("for noncommuting effects, 'and' and 'or' are undefined: ||[e,e']|| = " + fmt(c));
    }
}

}  // namespace

double Effect::residual(const Quantity& q) {
    const RVector eig = hermitian_eigenvalues(q);
    return std::max({hermiticity_residual(q), -eig(0), eig(eig.size() - 1) - 1.0, 0.0});
}

Effect::Effect(Quantity q) : q_(std::move(q)) {
    const double r = residual(q_);
    if (r > kLogicTol) {
        throw PreconditionError("not an effect: residual " + fmt(r) + " exceeds " + fmt(kLogicTol));
    }
}

bool Effect::is_event() const { return Event::residual(q_) <= kLogicTol; }

double Event::residual(const Quantity& q) {
    return std::max(spectral_norm(q * q - q), hermiticity_residual(q));
}

Event::Event(Quantity q) : Event(Effect(std::move(q))) {}

Event::Event(Effect e) : e_(std::move(e)) {
    const double r = residual(e_.quantity());
    if (r > kLogicTol) {
        throw PreconditionError("not an event: residual " + fmt(r) + " exceeds " + fmt(kLogicTol));
    }
}

double probability(const Ensemble& ens, const Effect& e) {
    const Complex p = expectation(ens, e.quantity());
    if (std::abs(p.imag()) > 1e-10) {
        throw Error("probability has imaginary residual " + fmt(std::abs(p.imag())));
    }
    return p.real();
}

Effect negate(const Effect& e) { return Effect(Quantity::identity(e.ctx()) - e.quantity()); }

Event negate(const Event& e) { return Event(negate(e.effect())); }

AndOr and_or(const Effect& e, const Effect& e2) {
    require_commuting(e.quantity(), e2.quantity());
    const Quantity conj = e.quantity() * e2.quantity();
    return {Effect(conj), Effect(e.quantity() + e2.quantity() - conj)};
}

EventAndOr and_or(const Event& e, const Event& e2) {
    auto r = and_or(e.effect(), e2.effect());
    return {Event(std::move(r.conj)), Event(std::move(r.disj))};
}

bool is_independent(const Ensemble& ens, const Effect& e, const Effect& e2) {
    require_commuting(e.quantity(), e2.quantity());
    const Complex joint = expectation(ens, e.quantity() * e2.quantity());
    return std::abs(joint - expectation(ens, e.quantity()) * expectation(ens, e2.quantity())) <= 1e-10;
}

AlternativeReport check_alternative(const Alternative& a) {
    AlternativeReport r;
    if (a.members.empty()) {
        r.sum_ok = r.all_events = r.valid = true;
        return r;
    }
    const AlgebraContext& ctx = a.members.front().ctx();
    Quantity sum = Quantity::zero(ctx);
    r.all_events = true;
    for (const auto& m : a.members) {
        sum = sum + m.quantity();
        r.all_events = r.all_events && m.is_event();
    }
    const RVector eig = hermitian_eigenvalues(sum);
    r.sum_excess = std::max(0.0, eig(eig.size() - 1) - 1.0);
    r.sum_ok = is_positive(Quantity::identity(ctx) - sum);
    bool disjoint = true;
    if (r.all_events) {
        for (std::size_t k = 0; k < a.members.size(); ++k) {
            for (std::size_t l = k + 1; l < a.members.size(); ++l) {
                const double ov = spectral_norm(a.members[k].quantity() * a.members[l].quantity());
                r.max_overlap = std::max(r.max_overlap, ov);
                if (ov > kLogicTol) {
                    r.overlapping.emplace_back(k, l);
                    disjoint = false;
                }
            }
        }
    }
    r.valid = r.sum_ok && disjoint;
    return r;
}

MeanStatistics relative_frequency(const Ensemble& ens, const Effect& e, int copies) {
    return tensor_power_mean(ens, e.quantity(), copies);
}

}  // namespace qalg
