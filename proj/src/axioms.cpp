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

#include "qalg/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qalg/error.hpp"
#include "qalg/random.hpp"

namespace qalg {

bool AxiomReport::passed() const { return !first_failure().has_value(); }

std::optional<std::string> AxiomReport::first_failure() const {
    for (const auto& e : entries) {
        if (!(e.residual <= threshold)) {
            return e.name;
        }
    }
    return std::nullopt;
}

namespace {

/// Keeps the running maximum per axiom while preserving insertion order.
class Tally {
   public:
    void record(const std::string& name, double residual) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            index_.emplace(name, entries_.size());
            entries_.push_back({name, residual});
        } else {
            auto& slot = entries_[it->second].residual;
            slot = std::max(slot, residual);
        }
    }

    /// Boolean implications count a violation as residual 1/samples per hit.
    void violation(const std::string& name, bool ok, int samples) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            record(name, 0.0);
            it = index_.find(name);
        }
        if (!ok) {
            entries_[it->second].residual += 1.0 / samples;
        }
    }

    std::vector<AxiomResidual> take() { return std::move(entries_); }

   private:
    std::map<std::string, std::size_t> index_;
    std::vector<AxiomResidual> entries_;
};

double rel(const Quantity& a, const Quantity& b) {
    const double scale = std::max({1.0, a.data().cwiseAbs().maxCoeff(), b.data().cwiseAbs().maxCoeff()});
    return max_abs_diff(a, b) / scale;
}

double rel_scalar(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

AxiomReport check_qalgebra_axioms(const AlgebraContext& ctx, int samples, std::uint64_t seed) {
    if (samples < 1) {
        throw PreconditionError("check_qalgebra_axioms: samples must be >= 1");
    }
    random::Engine rng(seed);
    Tally t;
    const Quantity zero = Quantity::zero(ctx);
    const Quantity one = Quantity::identity(ctx);

    for (int s = 0; s < samples; ++s) {
        const Quantity f = random::quantity(ctx, rng);
        const Quantity g = random::quantity(ctx, rng);
        const Quantity h = random::quantity(ctx, rng);
        const Complex alpha = random::gaussian_complex(rng);
        const Complex beta = random::gaussian_complex(rng);
        const Quantity a1 = Quantity::scalar(ctx, alpha);
        const Quantity b1 = Quantity::scalar(ctx, beta);

        // (Q1) scalars embed as a *-homomorphism.
        t.record("Q1", std::max({rel(a1 + b1, Quantity::scalar(ctx, alpha + beta)),
                                 rel(a1 * b1, Quantity::scalar(ctx, alpha * beta)),
                                 rel(adjoint(a1), Quantity::scalar(ctx, std::conj(alpha)))}));
        // (Q2)
        t.record("Q2", std::max({rel((f * g) * h, f * (g * h)), rel(a1 * f, f * a1), rel(zero * f, zero),
                                 rel(one * f, f)}));
        // (Q3)
        t.record("Q3", std::max({rel((f + g) + h, f + (g + h)), rel(f * (g + h), f * g + f * h), rel(f + zero, f)}));
        // (Q4)
        t.record("Q4", std::max({rel(adjoint(adjoint(f)), f), rel(adjoint(f * g), adjoint(g) * adjoint(f)),
                                 rel(adjoint(f + g), adjoint(f) + adjoint(g))}));
        // (Q5) f*f = 0 only for f = 0: a nonzero f has nonzero f*f.
        t.violation("Q5", spectral_norm(adjoint(f) * f) > 0.0 && spectral_norm(adjoint(zero) * zero) == 0.0,
                    samples);

        // Order axioms on Hermitian f and positive increments.
        const Quantity fh = random::hermitian(ctx, rng);
        const Quantity p = random::positive(ctx, rng);
        const Quantity q = random::positive(ctx, rng);
        const Quantity g_up = fh + p;
        const Quantity h_up = g_up + q;
        // (Q6) reflexive, antisymmetric, transitive.
        const bool reflexive = leq(fh, fh);
        const bool antisym = leq(fh, g_up) && !leq(g_up, fh);
        const bool transitive = leq(fh, g_up) && leq(g_up, h_up) && leq(fh, h_up);
        t.violation("Q6", reflexive && antisym && transitive, samples);
        // (Q7)
        t.violation("Q7", leq(fh + h, g_up + h), samples);
        // (Q8) positive elements are Hermitian and g*fg >= 0; a non-Hermitian
        // element with positive Hermitian part must be rejected.
        const Quantity skew = ctx.is_diagonal() ? Quantity(ctx, CMatrix(p.data() + Complex(0, 1) * one.data()))
                                                : p + (g - adjoint(g));
        t.violation("Q8", is_hermitian(p) && is_positive(adjoint(g) * p * g) && !is_positive(skew), samples);
        // (Q9)
        t.violation("Q9", is_positive(one) && !is_positive(-one), samples);

        // (e.p1)
        t.record("e.p1", std::max({rel((f + g) * h, f * h + g * h), rel(f - f, zero), rel(f + g, g + f)}));
        // (e.p2)
        t.record("e.p2", rel(commutator(f, adjoint(f)), Complex(0, -2) * commutator(re_part(f), im_part(f))));
        // (e.p3)
        t.violation("e.p3", is_positive(adjoint(f) * f) && is_positive(f * adjoint(f)), samples);
        // (e.p4)
        t.violation("e.p4", spectral_norm(zero) == 0.0 && spectral_norm(f) > 0.0, samples);
        // (e.p5)
        const double lam = std::abs(alpha);
        t.violation("e.p5",
                    leq(adjoint(h) * fh * h, adjoint(h) * g_up * h) && leq(lam * fh, lam * g_up), samples);
        // (e.p6) 2||f|| ||g|| - (f*g + g*f) >= 0.
        {
            const double nf = spectral_norm(f);
            const double ng = spectral_norm(g);
            const Quantity lhs = Quantity::scalar(ctx, 2.0 * nf * ng) - (adjoint(f) * g + adjoint(g) * f);
            const double lmin = hermitian_eigenvalues(lhs)(0);
            t.record("e.p6", std::max(0.0, -lmin) / std::max(1.0, nf * ng));
        }
        // (e.p7)
        {
            const double nf = spectral_norm(f);
            const double ng = spectral_norm(g);
            const double scale = std::max(1.0, nf + ng);
            t.record("e.p7", std::max({rel_scalar(spectral_norm(alpha * f), std::abs(alpha) * nf),
                                       std::max(0.0, spectral_norm(f + g) - (nf + ng)) / scale,
                                       std::max(0.0, spectral_norm(f - g) - (nf + ng)) / scale}));
        }
        // (e.p8)
        {
            const double bound = spectral_norm(f) * spectral_norm(g);
            t.record("e.p8", std::max(0.0, spectral_norm(f * g) - bound) / std::max(1.0, bound));
        }
        // Realization facts: C*-norm identities.
        {
            const double nf = spectral_norm(f);
            t.record("norm.adjoint", rel_scalar(spectral_norm(adjoint(f)), nf));
            t.record("norm.cstar", rel_scalar(spectral_norm(adjoint(f) * f), nf * nf));
        }
        if (ctx.is_diagonal()) {
            t.record("commutative", rel(f * g, g * f));
        }
    }

    AxiomReport report;
    report.ctx = ctx;
    report.samples = samples;
    report.seed = seed;
    report.entries = t.take();
    return report;
}

}  // namespace qalg
