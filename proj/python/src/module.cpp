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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qalg/axioms.hpp"
#include "qalg/bell.hpp"
#include "qalg/demos.hpp"
#include "qalg/dynamics.hpp"
#include "qalg/effects.hpp"
#include "qalg/error.hpp"
#include "qalg/states.hpp"
#include "qalg/uncertainty.hpp"

namespace py = pybind11;
using namespace qalg;

namespace {

Quadruple quadruple(const std::vector<Quantity>& f) {
    if (f.size() != 4) throw PreconditionError("expected 4 quantities, got " + std::to_string(f.size()));
    return {f[0], f[1], f[2], f[3]};
}

/// JSON text of one demo report; `input` is the file payload for commands that take one.
std::string run_demo(const std::string& command, std::uint64_t seed, std::optional<double> tol,
                     const std::optional<std::string>& input) {
    const demos::Options opt{seed, tol};
    const auto payload = [&] { return json_io::parse(input.value_or("{}")); };
    demos::DemoResult r;
    if (command == "chsh") {
        r = input ? demos::cmd_chsh_file(payload(), opt) : demos::cmd_chsh(opt);
    } else if (command == "mermin-peres") {
        r = input ? demos::cmd_mermin_peres_file(payload(), opt) : demos::cmd_mermin_peres(opt);
    } else if (command == "hydrogen") {
        r = demos::cmd_hydrogen({}, opt);
    } else if (command == "moon") {
        r = demos::cmd_moon({}, opt);
    } else if (command == "weak-law") {
        r = demos::cmd_weak_law(opt);
    } else if (command == "complementarity") {
        r = input ? demos::cmd_complementarity_file(payload(), opt) : demos::cmd_complementarity(opt);
    } else if (command == "probability") {
        r = input ? demos::cmd_probability_file(payload(), opt) : demos::cmd_probability(opt);
    } else if (command == "axioms") {
        const AlgebraContext ctx = input ? json_io::context_from_json(payload()) : AlgebraContext::matrix(4);
        r = demos::cmd_axioms(ctx, 200, opt);
    } else if (command == "evolve") {
        if (!input) throw PreconditionError("evolve needs an input document");
        r = demos::cmd_evolve(payload(), opt);
    } else {
        throw PreconditionError("unknown command \"" + command + "\"");
    }
    r.seed = seed;
    return demos::to_json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantities, ensembles and states in finite-dimensional Q-algebras.";

    static py::exception<Error> base(m, "QalgError", PyExc_ValueError);
    static py::exception<ContextMismatch> mismatch(m, "ContextMismatch", base.ptr());
    static py::exception<PreconditionError> precondition(m, "PreconditionError", base.ptr());
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ContextMismatch& e) {
            py::set_error(mismatch, e.what());
        } catch (const PreconditionError& e) {
            py::set_error(precondition, e.what());
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    py::enum_<Kind>(m, "Kind").value("MATRIX", Kind::Matrix).value("DIAGONAL", Kind::Diagonal);

    py::class_<AlgebraContext>(m, "AlgebraContext")
        .def(py::init<Kind, std::size_t, double, double>(), py::arg("kind"), py::arg("dim"),
             py::arg("tol_herm") = 1e-10, py::arg("tol_psd") = 1e-10)
        .def_static("matrix", &AlgebraContext::matrix)
        .def_static("diagonal", &AlgebraContext::diagonal)
        .def_readonly("kind", &AlgebraContext::kind)
        .def_readonly("dim", &AlgebraContext::dim)
        .def_readonly("tol_herm", &AlgebraContext::tol_herm)
        .def_readonly("tol_psd", &AlgebraContext::tol_psd)
        .def(py::self == py::self)
        .def("__repr__", &AlgebraContext::describe);

    py::class_<Quantity>(m, "Quantity")
        .def(py::init([](const AlgebraContext& ctx, const CMatrix& data) {
                 // Diagonal quantities take their n values as a flat array.
                 if (ctx.is_diagonal()) {
                     return Quantity(ctx, CVector(Eigen::Map<const CVector>(data.data(), data.size())));
                 }
                 return Quantity(ctx, data);
             }),
             py::arg("ctx"), py::arg("data"))
        .def_static("from_matrix", &Quantity::from_matrix)
        .def_static("from_values", &Quantity::from_values)
        .def_static("zero", &Quantity::zero)
        .def_static("identity", &Quantity::identity)
        .def_static("scalar", &Quantity::scalar)
        .def_property_readonly("ctx", &Quantity::ctx)
        .def_property_readonly("dim", &Quantity::dim)
        .def("dense", &Quantity::dense)
        .def("adjoint", [](const Quantity& f) { return adjoint(f); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def("__mul__", [](const Quantity& f, Complex a) { return scale(a, f); }, py::is_operator())
        .def("__rmul__", [](const Quantity& f, Complex a) { return scale(a, f); }, py::is_operator())
        .def("__repr__", [](const Quantity& f) { return "<Quantity " + f.ctx().describe() + ">"; });

    m.def("commutator", &commutator);
    m.def("spectral_norm", &spectral_norm);
    m.def("is_hermitian", &is_hermitian);
    m.def("is_positive", &is_positive);
    m.def("leq", &leq);
    m.def("sigma1", &pauli::sigma1);
    m.def("sigma2", &pauli::sigma2);
    m.def("sigma3", &pauli::sigma3);

    py::class_<AxiomReport>(m, "AxiomReport")
        .def_property_readonly("passed", &AxiomReport::passed)
        .def_property_readonly("first_failure", &AxiomReport::first_failure)
        .def_property_readonly("residuals", [](const AxiomReport& r) {
            std::vector<std::pair<std::string, double>> out;
            for (const auto& e : r.entries) out.emplace_back(e.name, e.residual);
            return out;
        });
    m.def("check_qalgebra_axioms", &check_qalgebra_axioms, py::arg("ctx"), py::arg("samples") = 200,
          py::arg("seed") = 42);

    py::class_<Ensemble>(m, "Ensemble")
        .def_static("weighted", &Ensemble::weighted)
        .def_static("pure", &Ensemble::pure)
        .def_static("density", &Ensemble::density)
        .def_static("gibbs", &Ensemble::gibbs, py::arg("ctx"), py::arg("entropy"), py::arg("kbar") = 1.0)
        .def_property_readonly("ctx", &Ensemble::ctx)
        .def_property_readonly("form", [](const Ensemble& e) { return to_string(e.form()); })
        .def("density_matrix", &Ensemble::density_matrix);
    m.def("expectation", &expectation);
    m.def("covariance", &covariance);
    m.def("uncertainty", py::overload_cast<const Ensemble&, const Quantity&>(&qalg::uncertainty));

    py::class_<InequalityCheck>(m, "InequalityCheck")
        .def_readonly("lhs", &InequalityCheck::lhs)
        .def_readonly("rhs", &InequalityCheck::rhs)
        .def_readonly("holds", &InequalityCheck::holds);
    m.def("check_uncertainty_relation", &check_uncertainty_relation);
    m.def("check_cauchy_schwarz", &check_cauchy_schwarz);
    py::class_<ComplementarityCertificate>(m, "ComplementarityCertificate")
        .def_readonly("gamma", &ComplementarityCertificate::gamma)
        .def_readonly("argmin_x", &ComplementarityCertificate::argmin_x)
        .def_readonly("argmin_y", &ComplementarityCertificate::argmin_y);
    m.def("certify_complementarity", &certify_complementarity, py::arg("f"), py::arg("g"), py::arg("range") = 0.0,
          py::arg("coarse_steps") = 61, py::arg("refine") = true);
    m.def("truncated_oscillator", &truncated_oscillator, py::arg("n"), py::arg("hbar") = 1.0);

    py::class_<ChshReport>(m, "ChshReport")
        .def_readonly("correlators", &ChshReport::correlators)
        .def_readonly("singles", &ChshReport::singles)
        .def_readonly("gamma", &ChshReport::gamma)
        .def_readonly("tsirelson_ok", &ChshReport::tsirelson_ok)
        .def_readonly("classical_bound_applicable", &ChshReport::classical_bound_applicable);
    m.def("chsh", [](const Ensemble& e, const std::vector<Quantity>& f) { return chsh(e, quadruple(f)); });
    m.def("build_spinpair", [] {
        const Spinpair sp = build_spinpair();
        return py::make_tuple(std::vector<Quantity>(sp.f.begin(), sp.f.end()), sp.psi);
    });

    py::class_<Effect>(m, "Effect")
        .def(py::init<Quantity>())
        .def_property_readonly("quantity", &Effect::quantity)
        .def_property_readonly("is_event", &Effect::is_event);
    m.def("probability", &probability);
    m.def("negate", py::overload_cast<const Effect&>(&negate));

    py::class_<Valuation>(m, "Valuation")
        .def_static("classical_point", &Valuation::classical_point)
        .def_static("copenhagen", &Valuation::copenhagen)
        .def_static("ensemble_state", &Valuation::ensemble_state)
        .def_property_readonly("kind", [](const Valuation& v) { return to_string(v.kind()); });
    m.def(
        "value",
        [](const Valuation& v, const Quantity& f) -> std::optional<Complex> {
            const RefValue r = value(v, f);
            if (!r.defined()) return std::nullopt;
            return r.value();
        },
        "Reference value, or None when undefined.");
    py::class_<NoGoReport>(m, "NoGoReport")
        .def_readonly("relations_ok", &NoGoReport::relations_ok)
        .def_readonly("relation_residual", &NoGoReport::relation_residual)
        .def_readonly("product_sign", &NoGoReport::product_sign)
        .def_readonly("consistent_assignments", &NoGoReport::consistent_assignments);
    m.def("mermin_peres_nogo", [](const std::vector<Quantity>& f) { return mermin_peres_nogo(quadruple(f)); });
    m.def(
        "is_sharp",
        [](const Valuation& v, const std::vector<Quantity>& set, int depth) {
            return check_sharpness(v, set, depth).verdict;
        },
        py::arg("v"), py::arg("set"), py::arg("closure_depth") = 2);

    py::class_<AutomorphismFamily>(m, "AutomorphismFamily")
        .def_static("hamiltonian", &AutomorphismFamily::hamiltonian, py::arg("h"), py::arg("hbar") = 1.0)
        .def_static("scattering", &AutomorphismFamily::scattering)
        .def("propagator", &AutomorphismFamily::propagator);
    m.def("evolve_quantity", &evolve_quantity);
    m.def("evolve_state", &evolve_state);
    m.def("evolve_ensemble", &evolve_ensemble);

    m.def("run_demo", &run_demo, py::arg("command"), py::arg("seed") = 42, py::arg("tol") = std::nullopt,
          py::arg("input") = std::nullopt, "JSON report of one CLI command.");
}
