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

#include "qalg/demos.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "qalg/error.hpp"
#include "qalg/random.hpp"

namespace qalg::demos {

using json_io::format_number;
using json_io::Json;

bool DemoResult::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

void DemoResult::value(std::string label, double computed, std::string unit, std::optional<double> reference) {
    DemoValue v{std::move(label), computed, std::move(unit), reference, 0.0};
    if (reference) {
        const double diff = std::abs(computed - *reference);
        v.error = *reference != 0.0 ? diff / std::abs(*reference) : diff;
    }
    values.push_back(std::move(v));
}

void DemoResult::check(std::string name, double measured, double limit, std::optional<double> tol_override) {
    if (tol_override) limit = *tol_override;
    // NaN never passes.
    checks.push_back({std::move(name), measured, limit, measured <= limit});
}

void DemoResult::require(std::string name, bool ok) { checks.push_back({std::move(name), ok ? 0.0 : 1.0, 0.0, ok}); }

Json to_json(const DemoResult& r) {
    Json vals = Json::array();
    for (const auto& v : r.values) {
        Json j{{"label", v.label}, {"computed", v.computed}, {"unit", v.unit}};
        if (v.reference) {
            j["reference"] = *v.reference;
            j["error"] = v.error;
        }
        vals.push_back(j);
    }
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"name", c.name}, {"measured", c.measured}, {"limit", c.limit}, {"passed", c.passed}});
    }
    Json out{{"command", r.name}};
    if (r.seed) out["seed"] = *r.seed;
    out["values"] = vals;
    out["checks"] = checks;
    out["details"] = r.details;
    out["passed"] = r.passed();
    return out;
}

std::string to_text(const DemoResult& r) {
    std::ostringstream os;
    os << r.name << '\n';
    if (r.seed) os << "  seed: " << *r.seed << '\n';
    for (const auto& v : r.values) {
        os << "  " << v.label << " = " << format_number(v.computed);
        if (!v.unit.empty()) os << ' ' << v.unit;
        if (v.reference) {
            os << "  (expected " << format_number(*v.reference) << ", error " << format_number(v.error) << ')';
        }
        os << '\n';
    }
    for (const auto& c : r.checks) {
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << format_number(c.measured)
           << " <= " << format_number(c.limit) << '\n';
    }
    if (!r.details.empty()) os << "  details: " << r.details.dump() << '\n';
    os << (r.passed() ? "result: pass" : "result: FAIL") << '\n';
    return os.str();
}

namespace {

void report_chsh(DemoResult& r, const ChshReport& rep) {
    static const char* names[] = {"<f1 f2>", "<f3 f2>", "<f3 f4>", "<f1 f4>"};
    for (int k = 0; k < 4; ++k) r.value(names[k], rep.correlators[k]);
    for (int k = 0; k < 4; ++k) r.value("<f" + std::to_string(k + 1) + ">", rep.singles[k]);
    r.value("gamma", rep.gamma);
    r.details["report"] = json_io::to_json(rep);
}

Quadruple quadruple_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 4) throw ParseError(where + ": expected an array of 4 quantities");
    return {json_io::quantity_from_json(j[0], where + "[0]"), json_io::quantity_from_json(j[1], where + "[1]"),
            json_io::quantity_from_json(j[2], where + "[2]"), json_io::quantity_from_json(j[3], where + "[3]")};
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("input: missing field \"") + key + "\"");
    return j[key];
}

void report_nogo(DemoResult& r, const std::string& tag, const NoGoReport& rep, const Options& opt) {
    r.value(tag + " relation residual", rep.relation_residual);
    r.value(tag + " product sign", rep.product_sign);
    r.value(tag + " consistent assignments", rep.consistent_assignments, "", 0.0);
    r.details[tag] = json_io::to_json(rep);
    (void)opt;
}

}  // namespace

DemoResult cmd_chsh(const Options& opt) {
    DemoResult r{"chsh"};
    const Spinpair sp = build_spinpair();
    const ChshReport rep = chsh(sp.psi, sp.f);
    const double h = std::sqrt(2.0) / 2.0;
    const double expected[4] = {h, h, h, -h};
    static const char* names[] = {"<f1 f2>", "<f3 f2>", "<f3 f4>", "<f1 f4>"};
    for (int k = 0; k < 4; ++k) r.value(names[k], rep.correlators[k], "", expected[k]);
    for (int k = 0; k < 4; ++k) r.value("<f" + std::to_string(k + 1) + ">", rep.singles[k], "", 0.0);
    r.value("gamma", rep.gamma, "", kTsirelsonBound);
    r.details["report"] = json_io::to_json(rep);

    r.check("|gamma - 2 sqrt 2|", std::abs(rep.gamma - kTsirelsonBound), 1e-10, opt.tol);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(rep.correlators[k] - expected[k]));
    r.check("max correlator error", worst, 1e-10, opt.tol);
    double singles = 0.0;
    for (double s : rep.singles) singles = std::max(singles, std::abs(s));
    r.check("max |<f_k>|", singles, 1e-10, opt.tol);
    r.require("Tsirelson bound holds", rep.tsirelson_ok);
    r.require("classical bound 2 violated", !rep.classical_ok);
    return r;
}

DemoResult cmd_chsh_file(const Json& input, const Options& opt) {
    DemoResult r{"chsh"};
    const Ensemble e = json_io::ensemble_from_json(member(input, "ensemble"), "ensemble");
    const ChshReport rep = chsh(e, quadruple_from_json(member(input, "quadruple"), "quadruple"));
    report_chsh(r, rep);
    r.check("gamma - 2 sqrt 2", rep.gamma - kTsirelsonBound, 1e-9, opt.tol);
    if (rep.classical_bound_applicable) r.check("gamma - 2 (classical)", rep.gamma - 2.0, 1e-9, opt.tol);
    return r;
}

DemoResult cmd_mermin_peres(const Options& opt) {
    DemoResult r{"mermin-peres"};
    Quadruple f = build_spinpair().f;
    const NoGoReport rep = mermin_peres_nogo(f);
    report_nogo(r, "spinpair", rep, opt);
    r.require("relations hold", rep.relations_ok);
    r.check("relation residual", rep.relation_residual, 1e-12, opt.tol);
    r.require("no consistent assignment", rep.consistent_assignments == 0);

    f[1] = -f[1];
    const NoGoReport neg = mermin_peres_nogo(f);
    report_nogo(r, "negated f2", neg, opt);
    r.require("negated f2: relations hold", neg.relations_ok);
    r.require("negated f2: no consistent assignment", neg.consistent_assignments == 0);
    return r;
}

DemoResult cmd_mermin_peres_file(const Json& input, const Options& opt) {
    DemoResult r{"mermin-peres"};
    const NoGoReport rep = mermin_peres_nogo(quadruple_from_json(member(input, "quadruple"), "quadruple"));
    report_nogo(r, "input", rep, opt);
    r.require("relations hold", rep.relations_ok);
    r.require("no consistent assignment", rep.consistent_assignments == 0);
    return r;
}

DemoResult cmd_hydrogen(const HydrogenConstants& c, const Options& opt) {
    if (!(c.bohr_radius > 0.0) || !(c.cutoff > 0.0) || !(c.rel_tol > 0.0)) {
        throw PreconditionError("hydrogen: constants must be positive");
    }
    DemoResult r{"hydrogen"};
    // Radial density r^2 exp(-2r/r0) in units u = r/r0.
    const auto moment = [&](int k) {
        double err = 0.0;
        const double val = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            [k](double u) { return std::pow(u, k + 2) * std::exp(-2.0 * u); }, 0.0, c.cutoff, 30, c.rel_tol, &err);
        if (!(err <= c.rel_tol * std::abs(val))) {
            std::ostringstream os;
            os << "hydrogen: quadrature did not converge for k = " << k << " (error estimate " << err << ")";
            throw Error(os.str());
        }
        return val;
    };
    const double m0 = moment(0), m1 = moment(1), m2 = moment(2);
    const double mean_r = m1 / m0;
    const double spread = std::sqrt(m2 / m0);
    // int u^2 exp(-2u) du over [0, inf) = 2!/2^3
    r.value("normalization / closed form", m0 / 0.25, "", 1.0);
    r.value("<r>/r0", mean_r, "", 1.5);
    r.value("dq/r0", spread, "", std::sqrt(3.0));
    r.value("<r>", mean_r * c.bohr_radius, "m", 1.5 * c.bohr_radius);
    r.value("dq", spread * c.bohr_radius, "m", std::sqrt(3.0) * c.bohr_radius);
    r.details["bohr_radius_m"] = c.bohr_radius;
    r.details["cutoff_r0"] = c.cutoff;
    r.details["quadrature"] = "gauss-kronrod 15, adaptive";
    r.check("<r>/r0 relative error", std::abs(mean_r - 1.5) / 1.5, 1e-6, opt.tol);
    r.check("dq/r0 relative error", std::abs(spread - std::sqrt(3.0)) / std::sqrt(3.0), 1e-6, opt.tol);
    return r;
}

DemoResult cmd_moon(const MoonConstants& c, const Options& opt) {
    if (!(c.moon_mass > 0.0) || !(c.proton_mass > 0.0) || !(c.atom_mass_factor > 0.0) || !(c.bohr_radius > 0.0)) {
        throw PreconditionError("moon: constants must be positive");
    }
    DemoResult r{"moon"};
    const double atoms = c.moon_mass / (c.atom_mass_factor * c.proton_mass);
    const double sigma = c.bohr_radius / std::sqrt(atoms);
    r.value("N", atoms, "atoms", 2.20e48);
    r.value("sigma_cm", sigma, "m", 3.567e-35);
    r.details["moon_mass_kg"] = c.moon_mass;
    r.details["proton_mass_kg"] = c.proton_mass;
    r.details["atom_mass_factor"] = c.atom_mass_factor;
    r.details["bohr_radius_m"] = c.bohr_radius;
    r.check("N relative error", std::abs(atoms - 2.20e48) / 2.20e48, 5e-3, opt.tol);
    r.check("sigma_cm relative error", std::abs(sigma - 3.567e-35) / 3.567e-35, 5e-3, opt.tol);
    return r;
}

DemoResult cmd_weak_law(const Options& opt) {
    DemoResult r{"weak-law"};
    const AlgebraContext ctx = AlgebraContext::matrix(2);
    const Event e(Quantity(ctx, CMatrix((CMatrix(2, 2) << 1, 0, 0, 0).finished())));
    double worst_sigma = 0.0, worst_mean = 0.0;
    Json rows = Json::array();
    for (double p : {0.2, 0.5, 0.9}) {
        CVector psi(2);
        psi << std::sqrt(p), std::sqrt(1.0 - p);
        const Ensemble ens = Ensemble::pure(ctx, psi);
        const double target = std::sqrt(p * (1.0 - p));
        for (int n = 1; n <= 6; ++n) {
            const MeanStatistics m = relative_frequency(ens, e, n);
            const double scaled = m.mean_sigma * std::sqrt(static_cast<double>(n));
            worst_sigma = std::max(worst_sigma, std::abs(scaled - target));
            worst_mean = std::max(worst_mean, std::abs(m.mean_expect - p));
            rows.push_back(Json{{"p", p}, {"N", n}, {"mean", m.mean_expect}, {"sigma", m.mean_sigma},
                                {"sigma_sqrtN", scaled}, {"sqrt_p_1mp", target}});
        }
    }
    r.value("max |sigma(q) sqrt N - sqrt(p(1-p))|", worst_sigma);
    r.value("max |<q> - p|", worst_mean);
    r.details["table"] = rows;
    r.check("sigma(q) sqrt N", worst_sigma, 1e-10, opt.tol);
    r.check("<q> = p", worst_mean, 1e-10, opt.tol);
    return r;
}

namespace {

void report_certificate(DemoResult& r, const std::string& tag, const ComplementarityCertificate& c) {
    r.details[tag] = json_io::to_json(c);
}

}  // namespace

DemoResult cmd_complementarity(const Options& opt) {
    DemoResult r{"complementarity"};
    r.seed = opt.seed;
    const ComplementarityCertificate pauli = certify_complementarity(pauli::sigma1(), pauli::sigma3(), 3.0, 61);
    r.value("gamma(sigma1, sigma3)", pauli.gamma, "", 1.0);
    report_certificate(r, "pauli", pauli);
    r.check("|gamma(sigma1, sigma3) - 1|", std::abs(pauli.gamma - 1.0), 1e-6, opt.tol);

    random::Engine rng(opt.seed);
    const AlgebraContext ctx = AlgebraContext::matrix(4);
    const CMatrix v = random::unitary(4, rng);
    CVector a(4), b(4);
    for (int k = 0; k < 4; ++k) {
        a(k) = random::gaussian_complex(rng).real();
        b(k) = random::gaussian_complex(rng).real();
    }
    const Quantity f(ctx, CMatrix(v * a.asDiagonal() * v.adjoint()));
    const Quantity g(ctx, CMatrix(v * b.asDiagonal() * v.adjoint()));
    const ComplementarityCertificate comm = certify_complementarity(f, g);
    r.value("gamma(commuting 4x4)", comm.gamma, "", 0.0);
    report_certificate(r, "commuting", comm);
    r.check("gamma(commuting 4x4)", comm.gamma, 1e-8, opt.tol);

    const AlgebraContext dctx = AlgebraContext::diagonal(4);
    const ComplementarityCertificate diag =
        certify_complementarity(random::hermitian(dctx, rng), random::hermitian(dctx, rng));
    r.value("gamma(diagonal)", diag.gamma, "", 0.0);
    report_certificate(r, "diagonal", diag);
    r.require("gamma(diagonal) is exactly 0", diag.gamma == 0.0);
    return r;
}

DemoResult cmd_complementarity_file(const Json& input, const Options& opt) {
    DemoResult r{"complementarity"};
    const Quantity f = json_io::quantity_from_json(member(input, "f"), "f");
    const Quantity g = json_io::quantity_from_json(member(input, "g"), "g");
    double range = 0.0;
    int steps = 61;
    if (input.contains("range")) {
        if (!input["range"].is_number()) throw ParseError("range: expected a number");
        range = input["range"].get<double>();
    }
    if (input.contains("steps")) {
        if (!input["steps"].is_number_integer()) throw ParseError("steps: expected an integer");
        steps = input["steps"].get<int>();
    }
    const ComplementarityCertificate c = certify_complementarity(f, g, range, steps);
    r.value("gamma", c.gamma);
    r.value("argmin x", c.argmin_x);
    r.value("argmin y", c.argmin_y);
    report_certificate(r, "certificate", c);
    (void)opt;
    return r;
}

DemoResult cmd_probability(const Options& opt) {
    DemoResult r{"probability"};
    r.seed = opt.seed;
    const AlgebraContext c2 = AlgebraContext::matrix(2);
    CVector psi(2), phi(2);
    psi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    phi << 1.0, 0.0;
    const double half = probability(Ensemble::pure(c2, psi), Effect(Quantity(c2, CMatrix(phi * phi.adjoint()))));
    r.value("p(e1 e1*) at (e1+e2)/sqrt 2", half, "", 0.5);
    r.check("example error", std::abs(half - 0.5), 1e-12, opt.tol);

    random::Engine rng(opt.seed);
    const std::size_t n = 4;
    const AlgebraContext ctx = AlgebraContext::matrix(n);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const CVector ph = random::unit_vector(n, rng);
        const CVector ps = random::unit_vector(n, rng);
        const double p = probability(Ensemble::pure(ctx, ps), Effect(Quantity(ctx, CMatrix(ph * ph.adjoint()))));
        worst = std::max(worst, std::abs(p - std::norm(ph.dot(ps))));
    }
    r.value("max |p(e_phi) - |phi* psi|^2| over 100 pairs", worst);
    r.check("squared amplitude", worst, 1e-12, opt.tol);
    return r;
}

DemoResult cmd_probability_file(const Json& input, const Options& opt) {
    DemoResult r{"probability"};
    const Ensemble e = json_io::ensemble_from_json(member(input, "ensemble"), "ensemble");
    const Effect eff = json_io::effect_from_json(member(input, "effect"), "effect");
    const double p = probability(e, eff);
    r.value("probability", p);
    r.details["event"] = eff.is_event();
    r.check("p - 1", p - 1.0, 1e-10, opt.tol);
    r.check("-p", -p, 1e-10, opt.tol);
    return r;
}

namespace {

Ensemble random_ensemble(const AlgebraContext& ctx, int k, random::Engine& rng) {
    if (ctx.is_diagonal()) return Ensemble::weighted(ctx, random::weights(ctx.dim, rng));
    switch (k % 4) {
        case 0:
            return Ensemble::weighted(ctx, random::weights(ctx.dim, rng));
        case 1:
            return Ensemble::pure(ctx, random::unit_vector(ctx.dim, rng));
        case 2:
            return Ensemble::density(ctx, random::density(ctx.dim, rng));
        default:
            return Ensemble::gibbs(ctx, random::hermitian(ctx, rng).data());
    }
}

double rel_gap(Complex a, Complex b, double scale) { return std::abs(a - b) / std::max(1.0, scale); }

}  // namespace

DemoResult cmd_axioms(const AlgebraContext& ctx, int samples, const Options& opt) {
    DemoResult r{"axioms"};
    r.seed = opt.seed;
    const AxiomReport rep = check_qalgebra_axioms(ctx, samples, opt.seed);
    for (const auto& e : rep.entries) r.check(e.name, e.residual, rep.threshold, opt.tol);
    r.details["context"] = json_io::to_json(ctx);
    r.details["samples"] = samples;

    // Ensemble laws and automorphism residuals on the same context.
    random::Engine rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    double e1 = 0.0, lin = 0.0, pos = 0.0, one = 0.0, aut = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Ensemble ens = random_ensemble(ctx, k, rng);
        const Quantity f = random::quantity(ctx, rng);
        const Quantity g = random::quantity(ctx, rng);
        const Complex alpha = random::gaussian_complex(rng);
        const double scale = spectral_norm(f) + spectral_norm(g);
        one = std::max(one, std::abs(expectation(ens, Quantity::identity(ctx)) - 1.0));
        e1 = std::max(e1, rel_gap(expectation(ens, adjoint(f)), std::conj(expectation(ens, f)), scale));
        lin = std::max(lin, rel_gap(expectation(ens, f + alpha * g),
                                    expectation(ens, f) + alpha * expectation(ens, g),
                                    scale * std::max(1.0, std::abs(alpha))));
        const double ff = expectation(ens, adjoint(f) * f).real();
        pos = std::max(pos, -ff / std::max(1.0, scale * scale));

        const AutomorphismFamily fam = AutomorphismFamily::hamiltonian(random::hermitian(ctx, rng));
        const double t = 4.0 * (random::gaussian_complex(rng).real());
        const double s = 4.0 * (random::gaussian_complex(rng).real());
        aut = std::max(aut, automorphism_residuals(fam, f, g, alpha, t, s).max());
    }
    r.check("ensemble <1> = 1", one, 1e-10, opt.tol);
    r.check("ensemble <f*> = <f>*", e1, 1e-10, opt.tol);
    r.check("ensemble linearity", lin, 1e-10, opt.tol);
    r.check("ensemble <f*f> >= 0", pos, 1e-10, opt.tol);
    r.check("automorphism (A1)-(A3)", aut, 1e-10, opt.tol);
    r.details["axioms"] = json_io::to_json(rep);
    return r;
}

DemoResult cmd_evolve(const Json& input, const Options& opt) {
    DemoResult r{"evolve"};
    r.seed = opt.seed;
    const AutomorphismFamily fam = json_io::family_from_json(member(input, "family"), "family");
    const Json& tj = member(input, "t");
    if (!tj.is_number()) throw ParseError("t: expected a number");
    const double t = tj.get<double>();
    const AlgebraContext& ctx = fam.ctx();

    random::Engine rng(opt.seed);
    const Quantity g = random::quantity(ctx, rng);
    const Complex alpha = random::gaussian_complex(rng);
    const double s = fam.kind() == FamilyKind::HamiltonianConjugation ? 0.3 : 0.0;

    if (input.contains("quantity")) {
        const Quantity f = json_io::quantity_from_json(input["quantity"], "quantity");
        require_same_context(ctx, f.ctx(), "evolve");
        r.details["evolved"] = json_io::to_json(evolve_quantity(fam, f, t));
        const AutomorphismResiduals res = automorphism_residuals(fam, f, g, alpha, t, s);
        r.details["residuals"] = json_io::to_json(res);
        r.value("residual max", res.max());
        r.check("(A1)-(A3) residual", res.max(), 1e-10, opt.tol);
        return r;
    }
    if (input.contains("state")) {
        const Valuation v = json_io::valuation_from_json(input["state"], "state");
        const Valuation vt = evolve_state(fam, v, t);
        r.details["evolved"] = json_io::to_json(vt);
        const Quantity f = random::quantity(ctx, rng);
        const AutomorphismResiduals res = automorphism_residuals(fam, f, g, alpha, t, s);
        r.details["residuals"] = json_io::to_json(res);
        r.value("residual max", res.max());
        r.check("(A1)-(A3) residual", res.max(), 1e-10, opt.tol);
        // v_t(f) = v(S_t f) on the same random f.
        const RefValue lhs = value(vt, f);
        const RefValue rhs = value(v, evolve_quantity(fam, f, t));
        if (lhs.defined() && rhs.defined()) {
            const double gap = std::abs(lhs.value() - rhs.value()) / std::max(1.0, spectral_norm(f));
            r.value("duality residual", gap);
            r.check("v_t(f) = v(S_t f)", gap, 1e-10, opt.tol);
        } else {
            r.require("v_t(f) and v(S_t f) both undefined", !lhs.defined() && !rhs.defined());
        }
        return r;
    }
    throw ParseError("input: expected a \"quantity\" or \"state\" field");
}

}  // namespace qalg::demos
