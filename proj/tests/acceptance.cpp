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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qalg/axioms.hpp"
#include "qalg/bell.hpp"
#include "qalg/demos.hpp"
#include "qalg/dynamics.hpp"
#include "qalg/effects.hpp"
#include "qalg/random.hpp"
#include "qalg/states.hpp"
#include "qalg/uncertainty.hpp"

using namespace qalg;


namespace {

const double kRoot2 = std::sqrt(2.0);

struct Outcome {
    bool pass = true;
    std::string detail;
    /// Wall-clock limit in seconds, checked after the run (0 = none).
    double time_limit = 0.0;
};

/// Accumulates "name=value" fragments and a conjunction of conditions.
class Tally {
   public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass_ = false;
            failures_ += (failures_.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& key, double x) {
        std::ostringstream os;
        os.precision(3);
        os << key << '=' << x;
        notes_ += (notes_.empty() ? "" : ", ") + os.str();
    }
    Outcome done(double time_limit = 0.0) const {
        return {pass_, failures_.empty() ? notes_ : notes_ + " | FAILED: " + failures_, time_limit};
    }

   private:
    bool pass_ = true;
    std::string notes_;
    std::string failures_;
};

random::Engine engine(std::uint64_t salt) { return random::Engine(20240601ULL + salt); }

double uniform(random::Engine& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

double computed(const demos::DemoResult& r, const std::string& label) {
    for (const auto& v : r.values) {
        if (v.label == label) return v.computed;
    }
    return std::nan("");
}

Quantity contraction(const AlgebraContext& ctx, random::Engine& g) {
    const Quantity h = random::hermitian(ctx, g);
    return (1.0 / spectral_norm(h)) * h;
}

/// Hermitian pair sharing a random eigenbasis.
std::pair<Quantity, Quantity> commuting_pair(std::size_t n, random::Engine& g) {
    const AlgebraContext ctx = AlgebraContext::matrix(n);
    const CMatrix u = random::unitary(n, g);
    const auto in_basis = [&](const CVector& d) { return Quantity(ctx, CMatrix(u * d.asDiagonal() * u.adjoint())); };
    const AlgebraContext dctx = AlgebraContext::diagonal(n);
    return {in_basis(random::hermitian(dctx, g).data().col(0)), in_basis(random::hermitian(dctx, g).data().col(0))};
}

Outcome chsh_saturation() {
    Tally t;
    const demos::DemoResult r = demos::cmd_chsh();
    const double gamma = computed(r, "gamma");
    t.note("gamma", gamma);
    t.expect(std::abs(gamma - 2 * kRoot2) <= 1e-10, "gamma != 2 sqrt 2");
    const std::vector<std::pair<std::string, double>> want{
        {"<f1 f2>", kRoot2 / 2}, {"<f3 f2>", kRoot2 / 2}, {"<f3 f4>", kRoot2 / 2}, {"<f1 f4>", -kRoot2 / 2}};
    double worst = 0.0;
    for (const auto& [label, x] : want) worst = std::max(worst, std::abs(computed(r, label) - x));
    t.note("max correlator error", worst);
    t.expect(worst <= 1e-10, "correlator error");
    t.expect(r.passed(), "demo checks");
    return t.done(1.0);
}

Outcome tsirelson_suite() {
    Tally t;
    auto g = engine(2);
    const AlgebraContext c4 = AlgebraContext::matrix(4);
    const AlgebraContext c2 = AlgebraContext::matrix(2);
    const CMatrix id = CMatrix::Identity(2, 2);
    double worst = 0.0;
    // Odd pairs act on different tensor factors, so the correlators are real.
    for (int k = 0; k < 1000; ++k) {
        const Quadruple f{Quantity(c4, linalg::kron(contraction(c2, g).data(), id)),
                          Quantity(c4, linalg::kron(id, contraction(c2, g).data())),
                          Quantity(c4, linalg::kron(contraction(c2, g).data(), id)),
                          Quantity(c4, linalg::kron(id, contraction(c2, g).data()))};
        const ChshReport r = chsh(Ensemble::density(c4, random::density(4, g)), f);
        worst = std::max(worst, r.gamma);
        t.expect(r.tsirelson_ok, "tsirelson_ok false");
    }
    t.note("max gamma (bipartite)", worst);
    t.expect(worst <= 2 * kRoot2 + 1e-9, "bipartite bound");
    // Arbitrary contractions: the complex combination obeys the same bound.
    double worst_complex = 0.0;
    for (int k = 0; k < 1000; ++k) {
        std::vector<Quantity> f;
        for (int j = 0; j < 4; ++j) f.push_back(contraction(c4, g));
        const Ensemble e = Ensemble::density(c4, random::density(4, g));
        const Complex s = expectation(e, f[0] * f[1]) + expectation(e, f[2] * f[1]) + expectation(e, f[2] * f[3]) -
                          expectation(e, f[0] * f[3]);
        worst_complex = std::max(worst_complex, std::abs(s));
    }
    t.note("max |gamma| (general)", worst_complex);
    t.expect(worst_complex <= 2 * kRoot2 + 1e-9, "general bound");
    return t.done(30.0);
}

Outcome classical_suite() {
    Tally t;
    auto g = engine(3);
    const std::size_t na = 3, nb = 4;
    const AlgebraContext ctx = AlgebraContext::diagonal(na * nb);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const RVector pa = random::weights(na, g), pb = random::weights(nb, g);
        std::vector<RVector> local{RVector(na), RVector(nb), RVector(na), RVector(nb)};
        for (auto& l : local) {
            for (Eigen::Index i = 0; i < l.size(); ++i) l(i) = uniform(g, -1.0, 1.0);
        }
        RVector p(na * nb);
        std::vector<CVector> v(4, CVector(na * nb));
        for (std::size_t a = 0; a < na; ++a) {
            for (std::size_t b = 0; b < nb; ++b) {
                const auto w = static_cast<Eigen::Index>(a * nb + b);
                p(w) = pa(a) * pb(b);
                v[0](w) = local[0](a);
                v[1](w) = local[1](b);
                v[2](w) = local[2](a);
                v[3](w) = local[3](b);
            }
        }
        const ChshReport r = chsh(Ensemble::weighted(ctx, p),
                                  {Quantity(ctx, v[0]), Quantity(ctx, v[1]), Quantity(ctx, v[2]), Quantity(ctx, v[3])});
        t.expect(r.classical_bound_applicable, "construction not classical");
        worst = std::max(worst, r.gamma);
    }
    t.note("max gamma", worst);
    t.expect(worst <= 2.0 + 1e-9, "classical bound");
    return t.done();
}

Outcome mermin_peres() {
    Tally t;
    const NoGoReport r = mermin_peres_nogo(build_spinpair().f);
    t.note("relation residual", r.relation_residual);
    t.note("consistent assignments", r.consistent_assignments);
    t.expect(r.relation_residual <= 1e-12, "relations");
    t.expect(r.consistent_assignments == 0, "consistent assignment found");
    t.expect(demos::cmd_mermin_peres().passed(), "demo checks");
    return t.done(1.0);
}

Outcome weak_law() {
    Tally t;
    const AlgebraContext c2 = AlgebraContext::matrix(2);
    const Effect event(Quantity(c2, CMatrix((CMatrix(2, 2) << 1, 0, 0, 0).finished())));
    double worst = 0.0;
    for (const double p : {0.2, 0.5, 0.9}) {
        const Ensemble e = Ensemble::pure(c2, (CVector(2) << std::sqrt(p), std::sqrt(1 - p)).finished());
        for (int n = 1; n <= 6; ++n) {
            const MeanStatistics m = relative_frequency(e, event, n);
            worst = std::max(worst, std::abs(m.mean_sigma * std::sqrt(n) - std::sqrt(p * (1 - p))));
            worst = std::max(worst, std::abs(m.mean_expect - p));
        }
    }
    t.note("max error", worst);
    t.expect(worst <= 1e-10, "sigma sqrt N");
    return t.done();
}

Outcome complementarity() {
    Tally t;
    auto g = engine(6);
    const AlgebraContext c2 = AlgebraContext::matrix(2);
    const Quantity s1(c2, CMatrix((CMatrix(2, 2) << 0, 1, 1, 0).finished()));
    const Quantity s3(c2, CMatrix((CMatrix(2, 2) << 1, 0, 0, -1).finished()));
    const double pauli = certify_complementarity(s1, s3).gamma;
    t.note("gamma(s1,s3)", pauli);
    t.expect(std::abs(pauli - 1.0) <= 1e-6, "Pauli gamma");
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        auto [f, h] = commuting_pair(4, g);
        // Include degenerate spectra: functions of a single quantity.
        if (k % 5 == 1) h = f * f;
        if (k % 5 == 2) h = Quantity::identity(f.ctx());
        worst = std::max(worst, certify_complementarity(f, h).gamma);
    }
    t.note("max gamma(commuting 4x4)", worst);
    t.expect(worst <= 1e-8, "commuting pairs");
    double diagonal = 0.0;
    for (int k = 0; k < 50; ++k) {
        const AlgebraContext d = AlgebraContext::diagonal(2 + static_cast<std::size_t>(k % 6));
        diagonal = std::max(diagonal, certify_complementarity(random::hermitian(d, g), random::hermitian(d, g)).gamma);
    }
    t.note("max gamma(diagonal)", diagonal);
    t.expect(diagonal == 0.0, "diagonal pairs not exactly 0");
    return t.done();
}

Outcome uncertainty_relation() {
    Tally t;
    auto g = engine(7);
    const AlgebraContext c4 = AlgebraContext::matrix(4);
    int violations = 0;
    for (int k = 0; k < 1000; ++k) {
        const Ensemble e = Ensemble::density(c4, random::density(4, g));
        const InequalityCheck c = check_uncertainty_relation(e, random::hermitian(c4, g), random::hermitian(c4, g));
        if (!c.holds) ++violations;
    }
    t.note("violations", violations);
    t.expect(violations == 0, "uncertainty relation");
    double worst = 0.0;
    for (const int n : {8, 16, 32}) {
        for (const double hbar : {1.0, 0.5}) {
            const auto [q, p] = truncated_oscillator(n, hbar);
            CVector ground = CVector::Zero(n);
            ground(0) = 1.0;
            const Ensemble e = Ensemble::pure(q.ctx(), ground);
            worst = std::max(worst, std::abs(uncertainty(e, q) * uncertainty(e, p) - hbar / 2));
        }
    }
    t.note("max |sigma(q)sigma(p) - hbar/2|", worst);
    t.expect(worst <= 1e-10, "oscillator ground state");
    return t.done();
}

Outcome squared_amplitude() {
    Tally t;
    auto g = engine(8);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 6);
        const AlgebraContext ctx = AlgebraContext::matrix(n);
        const CVector phi = random::unit_vector(n, g), psi = random::unit_vector(n, g);
        const Effect e(Quantity(ctx, CMatrix(phi * phi.adjoint())));
        worst = std::max(worst, std::abs(probability(Ensemble::pure(ctx, psi), e) - std::norm(phi.dot(psi))));
    }
    t.note("max error", worst);
    t.expect(worst <= 1e-12, "squared amplitude");
    return t.done();
}

Outcome hydrogen() {
    Tally t;
    const demos::DemoResult r = demos::cmd_hydrogen();
    const double mean = computed(r, "<r>/r0"), spread = computed(r, "dq/r0");
    t.note("<r>/r0", mean);
    t.note("dq/r0", spread);
    t.expect(std::abs(mean - 1.5) / 1.5 <= 1e-6, "<r>/r0");
    t.expect(std::abs(spread - std::sqrt(3.0)) / std::sqrt(3.0) <= 1e-6, "dq/r0");
    return t.done(1.0);
}

Outcome moon() {
    Tally t;
    const demos::DemoResult r = demos::cmd_moon();
    const double n = computed(r, "N"), sigma = computed(r, "sigma_cm");
    t.note("N", n);
    t.note("sigma_cm", sigma);
    t.expect(std::abs(n - 2.20e48) / 2.20e48 <= 5e-3, "N");
    t.expect(std::abs(sigma - 3.567e-35) / 3.567e-35 <= 5e-3, "sigma_cm");
    return t.done();
}

Outcome dynamics() {
    Tally t;
    auto g = engine(11);
    double group = 0.0, duality = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
        const AlgebraContext ctx = AlgebraContext::matrix(n);
        const auto a = AutomorphismFamily::hamiltonian(random::hermitian(ctx, g), uniform(g, 0.5, 2.0));
        const double s = uniform(g, -3.0, 3.0), time = uniform(g, -3.0, 3.0);
        const Quantity f = random::quantity(ctx, g);
        group = std::max(group, automorphism_residuals(a, f, random::quantity(ctx, g), random::gaussian_complex(g),
                                                       time, s)
                                    .max());
        const Valuation v = Valuation::ensemble_state(Ensemble::density(ctx, random::density(n, g)));
        const Complex heisenberg = value(v, evolve_quantity(a, f, time)).value();
        const Complex schroedinger = value(evolve_state(a, v, time), f).value();
        duality = std::max(duality, std::abs(heisenberg - schroedinger) / std::max(1.0, std::abs(heisenberg)));
    }
    t.note("max automorphism residual", group);
    t.note("max duality residual", duality);
    t.expect(group <= 1e-10, "automorphism residuals");
    t.expect(duality <= 1e-10, "duality");
    double lo = 1e300, hi = 0.0;
    for (int k = 0; k < 20; ++k) {
        const AlgebraContext ctx = AlgebraContext::matrix(3 + static_cast<std::size_t>(k % 3));
        const auto a = AutomorphismFamily::hamiltonian(contraction(ctx, g));
        const double time = uniform(g, -2.0, 2.0);
        const Quantity f = random::hermitian(ctx, g);
        const Ensemble rho = Ensemble::density(ctx, random::density(ctx.dim, g));
        for (const double ratio :
             {check_heisenberg_equation(a, f, time, 1e-3).residual /
                  check_heisenberg_equation(a, f, time, 5e-4).residual,
              check_von_neumann(a, rho, time, 1e-3).residual / check_von_neumann(a, rho, time, 5e-4).residual}) {
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    t.note("dt-halving ratio min", lo);
    t.note("max", hi);
    t.expect(lo >= 3.6 && hi <= 4.4, "finite-difference convergence order");
    return t.done();
}

/// Ensemble laws on every form: linearity, adjoint symmetry, positivity, normalization, monotony.
void ensemble_laws(Tally& t, random::Engine& g) {
    double worst = 0.0;
    int order = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
        const AlgebraContext m = AlgebraContext::matrix(n);
        Ensemble e = Ensemble::density(m, random::density(n, g));
        switch (k % 5) {
            case 1:
                e = Ensemble::pure(m, random::unit_vector(n, g));
                break;
            case 2:
                e = Ensemble::gibbs(m, random::hermitian(m, g).data(), uniform(g, 0.3, 3.0));
                break;
            case 3:
                e = Ensemble::weighted(m, random::weights(n, g));
                break;
            case 4:
                e = Ensemble::weighted(AlgebraContext::diagonal(n), random::weights(n, g));
                break;
            default:
                break;
        }
        const AlgebraContext ctx = e.ctx();
        const Quantity f = random::quantity(ctx, g), h = random::quantity(ctx, g);
        const Complex alpha = random::gaussian_complex(g);
        const double scale = std::max({1.0, spectral_norm(f), spectral_norm(h)});
        const Complex miss = expectation(e, alpha * f + h) - alpha * expectation(e, f) - expectation(e, h);
        worst = std::max(worst, std::abs(miss) / (scale * std::max(1.0, std::abs(alpha))));
        worst = std::max(worst, std::abs(expectation(e, adjoint(f)) - std::conj(expectation(e, f))) / scale);
        worst = std::max(worst, std::abs(expectation(e, Quantity::identity(ctx)) - 1.0));
        const Complex ff = expectation(e, adjoint(f) * f);
        if (ff.real() < -1e-12 * scale * scale || std::abs(ff.imag()) > 1e-12 * scale * scale) ++order;
        const Quantity a = random::hermitian(ctx, g);
        if (expectation(e, a).real() > expectation(e, a + random::positive(ctx, g)).real() + 1e-12 * scale) ++order;
    }
    t.note("ensemble law residual", worst);
    t.expect(worst <= 1e-10 && order == 0, "ensemble laws");
}

/// Effect logic: negation, conjunction/disjunction of commuting effects, events, alternatives.
void effect_logic(Tally& t, random::Engine& g) {
    double worst = 0.0;
    int failures = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
        const AlgebraContext ctx = AlgebraContext::matrix(n);
        const CMatrix u = random::unitary(n, g);
        const auto in_basis = [&](const RVector& d) {
            return Quantity(ctx, CMatrix(u * d.cast<Complex>().asDiagonal() * u.adjoint()));
        };
        RVector d1(n), d2(n), b1(n), b2(n);
        for (std::size_t i = 0; i < n; ++i) {
            d1(i) = uniform(g, 0, 1);
            d2(i) = uniform(g, 0, 1);
            b1(i) = uniform(g, 0, 1) < 0.5 ? 0.0 : 1.0;
            b2(i) = uniform(g, 0, 1) < 0.5 ? 0.0 : 1.0;
        }
        const Effect e1(in_basis(d1)), e2(in_basis(d2));
        const Ensemble rho = Ensemble::density(ctx, random::density(n, g));
        const double p1 = probability(rho, e1);
        if (p1 < -1e-10 || p1 > 1 + 1e-10) ++failures;
        worst = std::max(worst, std::abs(probability(rho, negate(e1)) - (1.0 - p1)));
        worst = std::max(worst, max_abs_diff(negate(negate(e1)).quantity(), e1.quantity()));
        const AndOr x = and_or(e1, e2);
        // e ^ e' + e v e' = e + e', and De Morgan.
        worst = std::max(worst, max_abs_diff(x.conj.quantity() + x.disj.quantity(), e1.quantity() + e2.quantity()));
        worst = std::max(worst,
                         max_abs_diff(negate(x.conj).quantity(), and_or(negate(e1), negate(e2)).disj.quantity()));
        const Event v1(in_basis(b1)), v2(in_basis(b2));
        const EventAndOr y = and_or(v1, v2);
        worst = std::max(worst, max_abs_diff(and_or(v1, v1).conj.quantity(), v1.quantity()));
        worst = std::max(worst, Event::residual(y.conj.quantity()) + Event::residual(y.disj.quantity()));
        // v and its negation form a valid alternative of disjoint events.
        if (!check_alternative({{v1.effect(), negate(v1).effect()}}).valid) ++failures;
    }
    t.note("effect logic residual", worst);
    t.expect(worst <= 1e-10 && failures == 0, "effect logic");
}

/// State laws: linearity (S1), unrestricted additivity (SL), monotony (SM),
/// and the Copenhagen -> pure ensemble embedding.
void state_laws(Tally& t, random::Engine& g) {
    double worst = 0.0;
    int order = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
        const AlgebraContext ctx = AlgebraContext::matrix(n);
        const Valuation v = Valuation::ensemble_state(Ensemble::density(ctx, random::density(n, g)));
        const Quantity f = random::quantity(ctx, g), h = random::quantity(ctx, g);
        const Complex alpha = random::gaussian_complex(g);
        const double scale = std::max({1.0, spectral_norm(f), spectral_norm(h)}) * std::max(1.0, std::abs(alpha));
        worst = std::max(worst, std::abs(value(v, alpha * f + h).value() - alpha * value(v, f).value() -
                                         value(v, h).value()) /
                                    scale);
        const Quantity a = random::hermitian(ctx, g), b = random::hermitian(ctx, g);
        worst = std::max(worst, std::abs(value(v, a).value().imag()));
        // Additivity holds without commutation.
        worst = std::max(worst, std::abs(value(v, a + b).value() - value(v, a).value() - value(v, b).value()) / scale);
        if (value(v, a).value().real() > value(v, a + random::positive(ctx, g)).value().real() + 1e-12 * scale) ++order;
        // e1 is an eigenvector of a block-diagonal Hermitian quantity.
        CMatrix block = CMatrix::Zero(n, n);
        block(0, 0) = uniform(g, -2, 2);
        block.bottomRightCorner(n - 1, n - 1) = random::hermitian(AlgebraContext::matrix(n - 1), g).data();
        const Quantity sharp(ctx, block);
        CVector e1 = CVector::Zero(n);
        e1(0) = 1.0;
        const RefValue cop = value(Valuation::copenhagen(ctx, e1), sharp);
        if (!cop.defined()) {
            ++order;
            continue;
        }
        const RefValue via_ensemble = value(Valuation::ensemble_state(Ensemble::pure(ctx, e1)), sharp);
        worst = std::max(worst, std::abs(cop.value() - via_ensemble.value()));
    }
    t.note("state law residual", worst);
    t.expect(worst <= 1e-10 && order == 0, "state laws");
}

Outcome axiom_suite() {
    Tally t;
    int contexts = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const AxiomReport r = check_qalgebra_axioms(AlgebraContext::matrix(n), 200, 1000 + n);
        ++contexts;
        t.expect(r.passed(), "Matrix(" + std::to_string(n) + "): " + r.first_failure().value_or("?"));
    }
    for (std::size_t n = 2; n <= 16; ++n) {
        const AxiomReport r = check_qalgebra_axioms(AlgebraContext::diagonal(n), 200, 2000 + n);
        ++contexts;
        t.expect(r.passed(), "Diagonal(" + std::to_string(n) + "): " + r.first_failure().value_or("?"));
    }
    t.note("contexts", contexts);
    auto g = engine(12);
    ensemble_laws(t, g);
    effect_logic(t, g);
    state_laws(t, g);
    return t.done();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"CHSH saturation", chsh_saturation},
        {"Tsirelson property suite", tsirelson_suite},
        {"classical-bound suite", classical_suite},
        {"Mermin-Peres no-go", mermin_peres},
        {"weak law, exact form", weak_law},
        {"complementarity", complementarity},
        {"uncertainty relation", uncertainty_relation},
        {"squared amplitude", squared_amplitude},
        {"hydrogen", hydrogen},
        {"moon", moon},
        {"dynamics", dynamics},
        {"axiom suite", axiom_suite},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[k].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.time_limit > 0.0 && secs >= out.time_limit) {
            out.pass = false;
            out.detail += " | FAILED: runtime limit " + std::to_string(out.time_limit) + " s";
        }
        if (!out.pass) ++failed;
        std::printf("%s criterion %2zu (%s): %s [%.3f s]\n", out.pass ? "PASS" : "FAIL", k + 1,
                    criteria[k].first.c_str(), out.detail.c_str(), secs);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
