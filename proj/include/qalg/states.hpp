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

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "qalg/bell.hpp"
#include "qalg/ensemble.hpp"

namespace qalg {

/// A reference value: a complex number or the undefined symbol '?'.
/// Arithmetic propagates '?' except that 0 * ? = ? * 0 = 0.
class RefValue {
   public:
    RefValue(Complex v) : defined_(true), value_(v) {}  // NOLINT(google-explicit-constructor)
    RefValue(double v) : RefValue(Complex(v, 0.0)) {}   // NOLINT(google-explicit-constructor)
    static RefValue undefined(std::string reason = {});

    bool defined() const { return defined_; }
    /// Throws PreconditionError when undefined.
    Complex value() const;
    /// Why the value is undefined (empty for defined values).
    const std::string& reason() const { return reason_; }

    friend RefValue operator+(const RefValue& a, const RefValue& b);
    friend RefValue operator*(const RefValue& a, const RefValue& b);

   private:
    RefValue() = default;
    bool defined_ = false;
    Complex value_{};
    std::string reason_;
};

/// Eigenvector threshold of Copenhagen states, relative to max(1, ||f||).
inline constexpr double kEigenvectorTol = 1e-9;

enum class ValuationKind { ClassicalPoint, Copenhagen, EnsembleState };

std::string to_string(ValuationKind kind);

/// A state: a partial map from quantities to reference values.
class Valuation {
   public:
    /// Point evaluation f -> f(omega) on a Diagonal context. Continuity at
    /// omega is vacuous on a finite point set, so every f gets a value.
    static Valuation classical_point(const AlgebraContext& ctx, std::size_t omega);
    /// Eigenvalue if f psi = lambda psi, undefined otherwise. psi != 0 is normalized.
    static Valuation copenhagen(const AlgebraContext& ctx, const CVector& psi);
    /// v(f) = <f> for every f.
    static Valuation ensemble_state(Ensemble e);

    ValuationKind kind() const;
    const AlgebraContext& ctx() const { return ctx_; }
    std::size_t omega() const;
    const CVector& psi() const;
    const Ensemble& ensemble() const;

   private:
    struct Point {
        std::size_t omega;
    };
    struct Eigenstate {
        CVector psi;
    };
    struct FromEnsemble {
        Ensemble ensemble;
    };
    using Data = std::variant<Point, Eigenstate, FromEnsemble>;

    Valuation(AlgebraContext ctx, Data data) : ctx_(ctx), data_(std::move(data)) {}

    AlgebraContext ctx_;
    Data data_;
};

/// Reference value of f in state v. Values of Hermitian f are real (imaginary
/// residuals up to 1e-10 max(1,|v|) are dropped).
RefValue value(const Valuation& v, const Quantity& f);

// ---------------------------------------------------------------------------
// Sharpness

enum class SharpnessRule { SQ0, SQ1, SQ2, SQ3, ProductRule, AffineRule };

std::string to_string(SharpnessRule rule);

struct SharpnessWitness {
    SharpnessRule rule;
    /// Labels of the quantities involved, e.g. "(f1+f3)".
    std::string quantities;
    double residual = 0.0;
    std::string note;
};

struct SharpnessReport {
    /// Max residual per rule, indexed by SharpnessRule.
    std::array<double, 6> residuals{};
    bool verdict = false;
    std::vector<SharpnessWitness> witnesses;
    int closure_depth = 0;
    std::size_t members = 0;
    /// The closure hit the member cap before reaching closure_depth.
    bool truncated = false;
    /// Set when witnesses were dropped beyond the stored maximum.
    std::size_t witnesses_dropped = 0;

    double residual(SharpnessRule r) const { return residuals[static_cast<std::size_t>(r)]; }
};

inline constexpr double kSharpnessTol = 1e-9;

/// Closes `set` under squares, inverses (condition number <= 1e8) and sums and
/// differences of commuting pairs for `closure_depth` rounds (at most
/// `max_members` elements), then evaluates (SQ0)-(SQ3), the product rule
/// v(fg) = v(f)v(g) for commuting pairs and v(a + b f) = a + b v(f).
SharpnessReport check_sharpness(const Valuation& v, const std::vector<Quantity>& set, int closure_depth = 2,
                                std::size_t max_members = 256);

struct SpectrumReport {
    double value = 0.0;
    /// Smallest singular value of v(f) - f.
    double min_singular_value = 0.0;
    bool is_eigenvalue = false;
    bool is_event = false;
    /// v(f) in {0, 1} within 1e-9 (meaningful for events).
    bool dichotomic = false;
};

/// For Hermitian f sharp in v: checks that v(f) lies in the spectrum of f
/// (within 1e-8 max(1, ||f||)) and, for events, that v(f) is 0 or 1.
/// Throws PreconditionError when f is not Hermitian, v(f) is undefined or
/// {f} is not sharp.
SpectrumReport spectrum_membership(const Valuation& v, const Quantity& f);

struct NoGoReport {
    bool relations_ok = false;
    /// Worst residual of f_j^2 = 1 and the (anti)commutation pattern.
    double relation_residual = 0.0;
    /// s with f1f4f2f3 = s f1f2f3f4 (0 when neither sign fits).
    int product_sign = 0;
    int consistent_assignments = 0;
};

/// Checks f_j^2 = 1, f_j f_k = -f_k f_j for j - k = +-2 and commutation
/// otherwise, then counts the sign assignments (v1..v4) in {-1,1}^4 on which
/// the two product-rule routes to v(f1f2f3f4) and v(f1f4f2f3) agree with the
/// verified sign identity.
NoGoReport mermin_peres_nogo(const Quadruple& f);

struct SharpBellResult {
    double gamma = 0.0;
    bool holds = false;
    std::array<double, 4> values{};
};

/// |v(f1f2) + v(f2f3) + v(f3f4) - v(f1f4)| via the product rule for a set
/// that is sharp in v. Throws PreconditionError naming the failing
/// precondition (f_j^2 = 1, odd-pair commutation, defined values, sharpness).
SharpBellResult sharp_bell(const Valuation& v, const Quadruple& f);

struct ProductRuleCheck {
    double lhs = 0.0;
    double bound = 0.0;
    bool holds = false;
};

/// |v(fg) - v(f)v(g)| <= Delta f Delta g for commuting Hermitian f, g in an
/// ensemble state, with Delta f = sqrt(v(f^2) - v(f)^2).
ProductRuleCheck approx_product_rule(const Valuation& v, const Quantity& f, const Quantity& g);

/// sqrt(max(0, v(f^2) - v(f)^2)) in an ensemble state.
double uncertainty_measure(const Valuation& v, const Quantity& f);

}  // namespace qalg
