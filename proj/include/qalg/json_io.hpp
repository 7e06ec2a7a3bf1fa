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

#include <string>

#include "json.hpp"
#include "qalg/axioms.hpp"
#include "qalg/bell.hpp"
#include "qalg/dynamics.hpp"
#include "qalg/effects.hpp"
#include "qalg/states.hpp"
#include "qalg/uncertainty.hpp"

namespace qalg::json_io {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of x, shared by the human and JSON
/// outputs so both carry the same digits.
std::string format_number(double x);

/// Parses a whole document; syntax errors become ParseError.
Json parse(const std::string& text);
Json read_file(const std::string& path);

// Complex numbers are [re, im] pairs; plain numbers are accepted as real.
Json to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);

/// {"kind":"matrix"|"diagonal","dim":n[,"tol_herm":..,"tol_psd":..]}
Json to_json(const AlgebraContext& ctx);
AlgebraContext context_from_json(const Json& j, const std::string& where = "ctx");

/// {"kind","dim","data":[[re,im],...]} with data row-major (n*n entries for
/// matrices, n for diagonal quantities).
Json to_json(const Quantity& f);
Quantity quantity_from_json(const Json& j, const std::string& where = "quantity");

/// Quantity JSON plus "role":"effect"|"event".
Json to_json(const Effect& e);
Json to_json(const Event& e);
Effect effect_from_json(const Json& j, const std::string& where = "effect");
Event event_from_json(const Json& j, const std::string& where = "event");

/// {"form":"weighted"|"pure"|"density"|"gibbs","ctx":{...},"data":...[,"kbar":k]}
Json to_json(const Ensemble& e);
Ensemble ensemble_from_json(const Json& j, const std::string& where = "ensemble");

/// {"kind":"classical_point","ctx":..,"omega":k}
/// {"kind":"copenhagen","ctx":..,"psi":[[re,im],...]}
/// {"kind":"ensemble","ensemble":{...}}
Json to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j, const std::string& where = "state");

/// Value or {"undefined": reason}.
Json to_json(const RefValue& v);

/// {"family":"hamiltonian","H":{quantity},"hbar":h} or
/// {"family":"scattering","s":{quantity}}
Json to_json(const AutomorphismFamily& a);
AutomorphismFamily family_from_json(const Json& j, const std::string& where = "family");

Json to_json(const ChshReport& r);
Json to_json(const ComplementarityCertificate& c);
Json to_json(const InequalityCheck& c);
Json to_json(const SharpnessReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const NoGoReport& r);
Json to_json(const MeanStatistics& m);
Json to_json(const FiniteDifferenceCheck& c);
Json to_json(const AutomorphismResiduals& r);
Json to_json(const AlternativeReport& r);

}  // namespace qalg::json_io
