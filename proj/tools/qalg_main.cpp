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

// qalg: reproduces the framework's numbers and runs the library on JSON files.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input (I/O, parse
// or precondition error on user data).

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qalg/demos.hpp"
#include "qalg/error.hpp"

namespace {

using qalg::demos::DemoResult;
using qalg::json_io::Json;

struct Flags {
    bool json = false;
    std::uint64_t seed = 42;
    std::optional<double> tol;
    std::string file;
};

int emit(const DemoResult& r, const Flags& flags) {
    if (flags.json) {
        std::cout << qalg::demos::to_json(r).dump(2) << '\n';
    } else {
        std::cout << qalg::demos::to_text(r);
    }
    return r.passed() ? 0 : 1;
}

Json input_file(const Flags& flags, const char* command) {
    if (flags.file.empty()) throw qalg::ParseError(std::string(command) + ": --file <path> is required");
    return qalg::json_io::read_file(flags.file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qalg: Q-algebras, ensembles, Bell inequalities, sharp states and dynamics"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_flag("--json", flags.json, "machine-readable output");
    app.add_option("--seed", flags.seed, "RNG seed");
    app.add_option("--tol", flags.tol, "replace the limit of every numeric check");
    app.add_option("--file", flags.file, "JSON input");

    auto* chsh = app.add_subcommand("chsh", "CHSH value of the spinpair state, or of --file {ensemble, quadruple}");
    auto* mp = app.add_subcommand("mermin-peres", "sign assignments consistent with the product rule");
    auto* hydrogen = app.add_subcommand("hydrogen", "radial moments of the hydrogen ground state");
    qalg::demos::HydrogenConstants hc;
    hydrogen->add_option("--bohr-radius", hc.bohr_radius, "r0 in metres");
    hydrogen->add_option("--cutoff", hc.cutoff, "upper integration limit in units of r0");
    auto* moon = app.add_subcommand("moon", "spread of the centre of mass of the Moon");
    qalg::demos::MoonConstants mc;
    moon->add_option("--moon-mass", mc.moon_mass, "kg");
    moon->add_option("--proton-mass", mc.proton_mass, "kg");
    moon->add_option("--atom-mass-factor", mc.atom_mass_factor, "mean atomic mass / proton mass");
    moon->add_option("--bohr-radius", mc.bohr_radius, "m");
    auto* weak = app.add_subcommand("weak-law", "exact tensor-power weak law for qubit events");
    auto* compl_cmd =
        app.add_subcommand("complementarity", "certify complementarity, or --file {f, g[, range, steps]}");
    auto* evolve = app.add_subcommand("evolve", "--file {family, t, quantity|state}");
    auto* axioms = app.add_subcommand("axioms", "randomized axiom checks on one context (or --file ctx JSON)");
    std::string kind = "matrix";
    std::size_t dim = 4;
    int samples = 200;
    axioms->add_option("--kind", kind, "matrix or diagonal")->check(CLI::IsMember({"matrix", "diagonal"}));
    axioms->add_option("--dim", dim, "dimension")->check(CLI::PositiveNumber);
    axioms->add_option("--samples", samples, "random samples")->check(CLI::PositiveNumber);
    auto* prob = app.add_subcommand("probability", "squared amplitudes, or --file {ensemble, effect}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const qalg::demos::Options opt{flags.seed, flags.tol};
    try {
        DemoResult r;
        const bool from_file = !flags.file.empty();
        if (chsh->parsed()) {
            r = from_file ? qalg::demos::cmd_chsh_file(input_file(flags, "chsh"), opt) : qalg::demos::cmd_chsh(opt);
        } else if (mp->parsed()) {
            r = from_file ? qalg::demos::cmd_mermin_peres_file(input_file(flags, "mermin-peres"), opt)
                          : qalg::demos::cmd_mermin_peres(opt);
        } else if (hydrogen->parsed()) {
            r = qalg::demos::cmd_hydrogen(hc, opt);
        } else if (moon->parsed()) {
            r = qalg::demos::cmd_moon(mc, opt);
        } else if (weak->parsed()) {
            r = qalg::demos::cmd_weak_law(opt);
        } else if (compl_cmd->parsed()) {
            r = from_file ? qalg::demos::cmd_complementarity_file(input_file(flags, "complementarity"), opt)
                          : qalg::demos::cmd_complementarity(opt);
        } else if (evolve->parsed()) {
            r = qalg::demos::cmd_evolve(input_file(flags, "evolve"), opt);
        } else if (axioms->parsed()) {
            const qalg::AlgebraContext ctx =
                from_file ? qalg::json_io::context_from_json(input_file(flags, "axioms"))
                          : qalg::AlgebraContext(kind == "diagonal" ? qalg::Kind::Diagonal : qalg::Kind::Matrix, dim);
            r = qalg::demos::cmd_axioms(ctx, samples, opt);
        } else if (prob->parsed()) {
            r = from_file ? qalg::demos::cmd_probability_file(input_file(flags, "probability"), opt)
                          : qalg::demos::cmd_probability(opt);
        }
        r.seed = flags.seed;
        return emit(r, flags);
    } catch (const std::exception& e) {
        // Library errors here come from user input (files, flags) or from a
        // precondition the input violates.
        if (flags.json) {
            std::cout << Json{{"error", e.what()}, {"seed", flags.seed}}.dump(2) << '\n';
        }
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
