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
#include <utility>
#include <vector>

#include "qalg/json_io.hpp"

namespace qalg::demos {

/// A computed number next to the figure it should reproduce.
struct DemoValue {
    std::string label;
    double computed = 0.0;
    std::string unit;
    std::optional<double> reference;
    /// |computed - reference| / |reference|, or the absolute difference when
    /// the reference is zero. Zero when there is no reference.
    double error = 0.0;
};

/// One pass/fail line: passes iff measured <= limit.
struct DemoCheck {
    std::string name;
    double measured = 0.0;
    double limit = 0.0;
    bool passed = false;
};

struct DemoResult {
    DemoResult() = default;
    explicit DemoResult(std::string command) : name(std::move(command)) {}

    std::string name;
    std::optional<std::uint64_t> seed;
    std::vector<DemoValue> values;
    std::vector<DemoCheck> checks;
    /// Command-specific payload (reports, evolved objects).
    json_io::Json details = json_io::Json::object();

    bool passed() const;
    void value(std::string label, double computed, std::string unit = {}, std::optional<double> reference = {});
    /// Records measured <= limit; `tol_override` replaces the limit when set.
    void check(std::string name, double measured, double limit, std::optional<double> tol_override = {});
    /// Records a boolean condition as measured 0 (true) or 1 (false) against limit 0.
    void require(std::string name, bool ok);
};

json_io::Json to_json(const DemoResult& r);
/// Human-readable report; numbers are printed with json_io::format_number.
std::string to_text(const DemoResult& r);

struct Options {
    std::uint64_t seed = 42;
    /// Replaces the default limit of every numeric check when set.
    std::optional<double> tol;
};

/// Spinpair CHSH evaluation.
DemoResult cmd_chsh(const Options& opt = {});
/// CHSH on a user quadruple and ensemble: {"ensemble":..,"quadruple":[q1,q2,q3,q4]}.
DemoResult cmd_chsh_file(const json_io::Json& input, const Options& opt = {});

/// Mermin-Peres enumeration on the spinpair matrices and the f2-negated variant.
DemoResult cmd_mermin_peres(const Options& opt = {});
/// {"quadruple":[q1,q2,q3,q4]}.
DemoResult cmd_mermin_peres_file(const json_io::Json& input, const Options& opt = {});

struct HydrogenConstants {
    double bohr_radius = 5.29e-11;  // m
    double cutoff = 40.0;           // in Bohr radii
    double rel_tol = 1e-9;
};
/// Radial moments of the hydrogen ground state by Gauss-Kronrod quadrature.
DemoResult cmd_hydrogen(const HydrogenConstants& c = {}, const Options& opt = {});

struct MoonConstants {
    double moon_mass = 7.35e22;       // kg
    double proton_mass = 1.67e-27;    // kg
    double atom_mass_factor = 20.0;   // mean atomic mass in proton masses
    double bohr_radius = 5.29e-11;    // m
};
/// Atom count of the Moon and the spread of its centre of mass.
DemoResult cmd_moon(const MoonConstants& c = {}, const Options& opt = {});

/// Exact tensor-power weak law for qubit events p in {0.2, 0.5, 0.9}, N = 1..6.
DemoResult cmd_weak_law(const Options& opt = {});

/// (sigma1, sigma3), a seeded commuting 4x4 pair and a diagonal pair.
DemoResult cmd_complementarity(const Options& opt = {});
/// {"f":..,"g":..[,"range":r][,"steps":n]}.
DemoResult cmd_complementarity_file(const json_io::Json& input, const Options& opt = {});

/// Squared amplitude |phi* psi|^2 against probability(phi phi*) on seeded pairs.
DemoResult cmd_probability(const Options& opt = {});
/// {"ensemble":..,"effect":..}.
DemoResult cmd_probability_file(const json_io::Json& input, const Options& opt = {});

/// Q-algebra axioms, ensemble laws and automorphism residuals on one context.
DemoResult cmd_axioms(const AlgebraContext& ctx, int samples, const Options& opt = {});

/// {"family":..,"t":t, and "quantity":.. or "state":..}. Emits the evolved
/// object and the (A1)-(A3) residual block at seeded random f, g.
DemoResult cmd_evolve(const json_io::Json& input, const Options& opt = {});

}  // namespace qalg::demos
