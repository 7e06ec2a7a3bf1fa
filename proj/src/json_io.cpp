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

#include "qalg/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qalg/error.hpp"

namespace qalg::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_string()) fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

double number(const Json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) fail(where, "non-finite number");
    return x;
}

std::size_t dimension(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 1) fail(where, "expected a positive integer");
    return static_cast<std::size_t>(j.get<long long>());
}

/// Flat list of complex entries with an exact expected length.
CVector complex_list(const Json& j, std::size_t expected, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    if (j.size() != expected) {
        std::ostringstream os;
        os << "expected " << expected << " entries, got " << j.size();
        if (j.size() > expected) os << " (first extra entry at index " << expected << ")";
        else os << " (missing entry at index " << j.size() << ")";
        fail(where, os.str());
    }
    CVector out(static_cast<Eigen::Index>(expected));
    for (std::size_t k = 0; k < expected; ++k) {
        out(static_cast<Eigen::Index>(k)) = complex_from_json(j[k], where + "[" + std::to_string(k) + "]");
    }
    return out;
}

CMatrix square_from_list(const Json& j, std::size_t n, const std::string& where) {
    const CVector flat = complex_list(j, n * n, where);
    const auto m = static_cast<Eigen::Index>(n);
    CMatrix out(m, m);
    for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index c = 0; c < m; ++c) out(r, c) = flat(r * m + c);
    }
    return out;
}

Json complex_array(const CMatrix& m, bool row_major) {
    Json out = Json::array();
    if (row_major) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(to_json(m(r, c)));
        }
    } else {
        for (Eigen::Index k = 0; k < m.size(); ++k) out.push_back(to_json(m(k)));
    }
    return out;
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <std::size_t N>
Json array_json(const std::array<double, N>& a) {
    Json out = Json::array();
    for (double x : a) out.push_back(x);
    return out;
}

}  // namespace

std::string format_number(double x) { return Json(x).dump(); }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
    if (j.is_number()) return {number(j, where), 0.0};
    if (!j.is_array() || j.size() != 2) fail(where, "expected [re, im]");
    return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

Json to_json(const AlgebraContext& ctx) {
    return Json{{"kind", to_string(ctx.kind)},
                {"dim", ctx.dim},
                {"tol_herm", ctx.tol_herm},
                {"tol_psd", ctx.tol_psd}};
}

AlgebraContext context_from_json(const Json& j, const std::string& where) {
    const std::string kind = string_field(j, "kind", where);
    const std::size_t dim = dimension(field(j, "dim", where), where + ".dim");
    Kind k;
    if (kind == "matrix") k = Kind::Matrix;
    else if (kind == "diagonal") k = Kind::Diagonal;
    else fail(where + ".kind", "expected \"matrix\" or \"diagonal\", got \"" + kind + "\"");
    double th = 1e-10, tp = 1e-10;
    if (j.contains("tol_herm")) th = number(j["tol_herm"], where + ".tol_herm");
    if (j.contains("tol_psd")) tp = number(j["tol_psd"], where + ".tol_psd");
    try {
        return AlgebraContext(k, dim, th, tp);
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

Json to_json(const Quantity& f) {
    Json out = to_json(f.ctx());
    out["data"] = complex_array(f.data(), true);
    return out;
}

Quantity quantity_from_json(const Json& j, const std::string& where) {
    const AlgebraContext ctx = context_from_json(j, where);
    const Json& data = field(j, "data", where);
    if (ctx.is_diagonal()) return Quantity(ctx, complex_list(data, ctx.dim, where + ".data"));
    return Quantity(ctx, square_from_list(data, ctx.dim, where + ".data"));
}

Json to_json(const Effect& e) {
    Json out = to_json(e.quantity());
    out["role"] = e.is_event() ? "event" : "effect";
    return out;
}

Json to_json(const Event& e) {
    Json out = to_json(e.quantity());
    out["role"] = "event";
    return out;
}

Effect effect_from_json(const Json& j, const std::string& where) {
    if (j.contains("role")) {
        const std::string role = string_field(j, "role", where);
        if (role != "effect" && role != "event") fail(where + ".role", "expected \"effect\" or \"event\"");
    }
    return Effect(quantity_from_json(j, where));
}

Event event_from_json(const Json& j, const std::string& where) {
    if (j.contains("role") && string_field(j, "role", where) != "event") {
        fail(where + ".role", "expected \"event\"");
    }
    return Event(quantity_from_json(j, where));
}

Json to_json(const Ensemble& e) {
    Json out;
    switch (e.form()) {
        case EnsembleForm::Weighted: {
            out["form"] = "weighted";
            out["ctx"] = to_json(e.ctx());
            Json w = Json::array();
            for (Eigen::Index k = 0; k < e.weights().size(); ++k) w.push_back(e.weights()(k));
            out["data"] = w;
            break;
        }
        case EnsembleForm::PureVector:
            out["form"] = "pure";
            out["ctx"] = to_json(e.ctx());
            out["data"] = complex_array(e.psi(), false);
            break;
        case EnsembleForm::Density:
            out["form"] = "density";
            out["ctx"] = to_json(e.ctx());
            out["data"] = complex_array(e.rho(), true);
            break;
        case EnsembleForm::Gibbs:
            out["form"] = "gibbs";
            out["ctx"] = to_json(e.ctx());
            out["data"] = complex_array(e.entropy(), true);
            out["kbar"] = e.kbar();
            break;
    }
    return out;
}

Ensemble ensemble_from_json(const Json& j, const std::string& where) {
    const std::string form = string_field(j, "form", where);
    const AlgebraContext ctx = context_from_json(field(j, "ctx", where), where + ".ctx");
    const Json& data = field(j, "data", where);
    const std::string dwhere = where + ".data";
    if (form == "weighted") {
        if (!data.is_array() || data.size() != ctx.dim) {
            fail(dwhere, "expected " + std::to_string(ctx.dim) + " weights");
        }
        RVector w(static_cast<Eigen::Index>(ctx.dim));
        for (std::size_t k = 0; k < ctx.dim; ++k) {
            w(static_cast<Eigen::Index>(k)) = number(data[k], dwhere + "[" + std::to_string(k) + "]");
        }
        return Ensemble::weighted(ctx, w);
    }
    if (form == "pure") return Ensemble::pure(ctx, complex_list(data, ctx.dim, dwhere));
    if (form == "density") return Ensemble::density(ctx, square_from_list(data, ctx.dim, dwhere));
    if (form == "gibbs") {
        const double kbar = j.contains("kbar") ? number(j["kbar"], where + ".kbar") : 1.0;
        return Ensemble::gibbs(ctx, square_from_list(data, ctx.dim, dwhere), kbar);
    }
    fail(where + ".form", "unknown ensemble form \"" + form + "\"");
}

Json to_json(const Valuation& v) {
    switch (v.kind()) {
        case ValuationKind::ClassicalPoint:
            return Json{{"kind", "classical_point"}, {"ctx", to_json(v.ctx())}, {"omega", v.omega()}};
        case ValuationKind::Copenhagen:
            return Json{{"kind", "copenhagen"}, {"ctx", to_json(v.ctx())}, {"psi", complex_array(v.psi(), false)}};
        case ValuationKind::EnsembleState:
            return Json{{"kind", "ensemble"}, {"ensemble", to_json(v.ensemble())}};
    }
    return {};
}

Valuation valuation_from_json(const Json& j, const std::string& where) {
    const std::string kind = string_field(j, "kind", where);
    if (kind == "ensemble") {
        return Valuation::ensemble_state(ensemble_from_json(field(j, "ensemble", where), where + ".ensemble"));
    }
    const AlgebraContext ctx = context_from_json(field(j, "ctx", where), where + ".ctx");
    if (kind == "classical_point") {
        const Json& om = field(j, "omega", where);
        if (!om.is_number_integer() || om.get<long long>() < 0) {
            fail(where + ".omega", "expected a nonnegative integer");
        }
        return Valuation::classical_point(ctx, static_cast<std::size_t>(om.get<long long>()));
    }
    if (kind == "copenhagen") {
        return Valuation::copenhagen(ctx, complex_list(field(j, "psi", where), ctx.dim, where + ".psi"));
    }
    fail(where + ".kind", "unknown state kind \"" + kind + "\"");
}

Json to_json(const RefValue& v) {
    if (!v.defined()) return Json{{"undefined", v.reason()}};
    return to_json(v.value());
}

Json to_json(const AutomorphismFamily& a) {
    if (a.kind() == FamilyKind::HamiltonianConjugation) {
        return Json{{"family", "hamiltonian"}, {"H", to_json(a.generator())}, {"hbar", a.hbar()}};
    }
    return Json{{"family", "scattering"}, {"s", to_json(a.generator())}};
}

AutomorphismFamily family_from_json(const Json& j, const std::string& where) {
    const std::string fam = string_field(j, "family", where);
    if (fam == "hamiltonian") {
        const double hbar = j.contains("hbar") ? number(j["hbar"], where + ".hbar") : 1.0;
        return AutomorphismFamily::hamiltonian(quantity_from_json(field(j, "H", where), where + ".H"), hbar);
    }
    if (fam == "scattering") {
        return AutomorphismFamily::scattering(quantity_from_json(field(j, "s", where), where + ".s"));
    }
    fail(where + ".family", "expected \"hamiltonian\" or \"scattering\"");
}

Json to_json(const ChshReport& r) {
    return Json{{"correlators", array_json(r.correlators)},
                {"singles", array_json(r.singles)},
                {"gamma", r.gamma},
                {"tsirelson_ok", r.tsirelson_ok},
                {"classical_bound_applicable", r.classical_bound_applicable},
                {"classical_ok", r.classical_ok},
                {"imag_residual", r.imag_residual}};
}

Json to_json(const ComplementarityCertificate& c) {
    return Json{{"gamma", c.gamma},
                {"argmin_x", c.argmin_x},
                {"argmin_y", c.argmin_y},
                {"grid", {{"range", c.grid.range}, {"steps", c.grid.steps}}},
                {"refined", c.refined},
                {"grid_minimum", c.grid_minimum}};
}

Json to_json(const InequalityCheck& c) { return Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}}; }

Json to_json(const SharpnessReport& r) {
    Json res;
    for (int k = 0; k < 6; ++k) {
        const auto rule = static_cast<SharpnessRule>(k);
        res[to_string(rule)] = number_or_null(r.residual(rule));
    }
    Json wit = Json::array();
    for (const auto& w : r.witnesses) {
        wit.push_back(Json{{"rule", to_string(w.rule)},
                           {"quantities", w.quantities},
                           {"residual", number_or_null(w.residual)},
                           {"note", w.note}});
    }
    return Json{{"verdict", r.verdict},
                {"residuals", res},
                {"closure_depth", r.closure_depth},
                {"members", r.members},
                {"truncated", r.truncated},
                {"witnesses", wit},
                {"witnesses_dropped", r.witnesses_dropped}};
}

Json to_json(const AxiomReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(Json{{"name", e.name}, {"residual", e.residual}});
    Json out{{"ctx", to_json(r.ctx)},
             {"samples", r.samples},
             {"seed", r.seed},
             {"threshold", r.threshold},
             {"passed", r.passed()},
             {"entries", entries}};
    if (auto f = r.first_failure()) out["first_failure"] = *f;
    return out;
}

Json to_json(const NoGoReport& r) {
    return Json{{"relations_ok", r.relations_ok},
                {"relation_residual", r.relation_residual},
                {"product_sign", r.product_sign},
                {"consistent_assignments", r.consistent_assignments}};
}

Json to_json(const MeanStatistics& m) { return Json{{"mean_expect", m.mean_expect}, {"mean_sigma", m.mean_sigma}}; }

Json to_json(const FiniteDifferenceCheck& c) { return Json{{"residual", c.residual}, {"reference", c.reference}}; }

Json to_json(const AutomorphismResiduals& r) {
    return Json{{"scalars", r.scalars}, {"adjoint", r.adjoint},     {"sum", r.sum},
                {"product", r.product}, {"identity", r.identity},   {"group_law", r.group_law},
                {"max", r.max()}};
}

Json to_json(const AlternativeReport& r) {
    Json pairs = Json::array();
    for (const auto& [a, b] : r.overlapping) pairs.push_back(Json::array({a, b}));
    return Json{{"sum_excess", r.sum_excess}, {"sum_ok", r.sum_ok},           {"all_events", r.all_events},
                {"max_overlap", r.max_overlap}, {"overlapping", pairs},       {"valid", r.valid}};
}

}  // namespace qalg::json_io
