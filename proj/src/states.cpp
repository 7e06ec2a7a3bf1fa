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

#include "qalg/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "qalg/effects.hpp"
#include "qalg/error.hpp"
#include "qalg/linalg.hpp"

namespace qalg {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

// ---------------------------------------------------------------------------
// RefValue

RefValue RefValue::undefined(std::string reason) {
    RefValue r;
    r.reason_ = std::move(reason);
    return r;
}

Complex RefValue::value() const {
    if (!defined_) {
        throw PreconditionError("reference value is undefined" + (reason_.empty() ? "" : ": " + reason_));
    }
    return value_;
}

RefValue operator+(const RefValue& a, const RefValue& b) {
    if (!a.defined_) return a;
    if (!b.defined_) return b;
    return RefValue(a.value_ + b.value_);
}

RefValue operator*(const RefValue& a, const RefValue& b) {
    if (a.defined_ && a.value_ == Complex(0.0)) return RefValue(0.0);
    if (b.defined_ && b.value_ == Complex(0.0)) return RefValue(0.0);
    if (!a.defined_) return a;
    if (!b.defined_) return b;
    return RefValue(a.value_ * b.value_);
}

// ---------------------------------------------------------------------------
// Valuation

std::string to_string(ValuationKind kind) {
    switch (kind) {
        case ValuationKind::ClassicalPoint:
            return "classical_point";
        case ValuationKind::Copenhagen:
            return "copenhagen";
        case ValuationKind::EnsembleState:
            return "ensemble";
    }
    return "unknown";
}

Valuation Valuation::classical_point(const AlgebraContext& ctx, std::size_t omega) {
    if (!ctx.is_diagonal()) {
        throw ContextMismatch("classical point states live on a Diagonal context, got " + ctx.describe());
    }
    if (omega >= ctx.dim) {
        throw PreconditionError("classical point " + std::to_string(omega) + " out of range for " + ctx.describe());
    }
    return Valuation(ctx, Point{omega});
}

Valuation Valuation::copenhagen(const AlgebraContext& ctx, const CVector& psi) {
    if (psi.size() != static_cast<Eigen::Index>(ctx.dim)) {
        throw ParseError("psi has " + std::to_string(psi.size()) + " entries, context is " + ctx.describe());
    }
    const double n = psi.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw PreconditionError("Copenhagen states need a nonzero finite psi");
    }
    return Valuation(ctx, Eigenstate{psi / n});
}

Valuation Valuation::ensemble_state(Ensemble e) {
    const AlgebraContext ctx = e.ctx();
    return Valuation(ctx, FromEnsemble{std::move(e)});
}

ValuationKind Valuation::kind() const { return static_cast<ValuationKind>(data_.index()); }

std::size_t Valuation::omega() const {
    if (const auto* p = std::get_if<Point>(&data_)) return p->omega;
    throw PreconditionError("omega() requires a classical point state");
}

const CVector& Valuation::psi() const {
    if (const auto* p = std::get_if<Eigenstate>(&data_)) return p->psi;
    throw PreconditionError("psi() requires a Copenhagen state");
}

const Ensemble& Valuation::ensemble() const {
    if (const auto* p = std::get_if<FromEnsemble>(&data_)) return p->ensemble;
    throw PreconditionError("ensemble() requires an ensemble state");
}

RefValue value(const Valuation& v, const Quantity& f) {
    require_same_context(v.ctx(), f.ctx(), "value");
    Complex out;
    switch (v.kind()) {
        case ValuationKind::ClassicalPoint:
            out = f.data()(static_cast<Eigen::Index>(v.omega()), 0);
            break;
        case ValuationKind::Copenhagen: {
            const CVector& psi = v.psi();
            const CVector fpsi = f.is_diagonal() ? CVector(f.data().col(0).cwiseProduct(psi)) : CVector(f.data() * psi);
            const Complex lambda = psi.dot(fpsi);
            const double miss = (fpsi - lambda * psi).norm();
            // The limit is at least kEigenvectorTol, so the norm is only needed above it.
            const double limit =
                miss <= kEigenvectorTol ? kEigenvectorTol : kEigenvectorTol * std::max(1.0, spectral_norm(f));
            if (miss > limit) {
                return RefValue::undefined("psi is not an eigenvector: ||f psi - lambda psi|| = " + fmt(miss) +
                                           " > " + fmt(limit));
            }
            out = lambda;
            break;
        }
        case ValuationKind::EnsembleState:
            out = expectation(v.ensemble(), f);
            break;
    }
    if (out.imag() != 0.0 && std::abs(out.imag()) <= 1e-10 * std::max(1.0, std::abs(out)) && is_hermitian(f)) {
        out = Complex(out.real(), 0.0);
    }
    return RefValue(out);
}

// ---------------------------------------------------------------------------
// Sharpness

std::string to_string(SharpnessRule rule) {
    switch (rule) {
        case SharpnessRule::SQ0:
            return "SQ0";
        case SharpnessRule::SQ1:
            return "SQ1";
        case SharpnessRule::SQ2:
            return "SQ2";
        case SharpnessRule::SQ3:
            return "SQ3";
        case SharpnessRule::ProductRule:
            return "product";
        case SharpnessRule::AffineRule:
            return "affine";
    }
    return "unknown";
}

namespace {

struct Member {
    Quantity q;
    std::string label;
    double norm = 0.0;
};

constexpr double kCondLimit = 1e8;
constexpr std::size_t kMaxWitnesses = 64;

bool commute(const Quantity& a, double norm_a, const Quantity& b, double norm_b) {
    if (a.is_diagonal()) return true;
    const double scale = std::max(1.0, norm_a * norm_b);
    return spectral_norm(commutator(a, b)) <= 1e-10 * scale;
}

bool commute(const Quantity& a, const Quantity& b) { return commute(a, spectral_norm(a), b, spectral_norm(b)); }

std::optional<Quantity> inverse(const Quantity& f) {
    if (f.is_diagonal()) {
        const Eigen::ArrayXd mod = f.data().col(0).cwiseAbs().array();
        if (mod.minCoeff() == 0.0 || mod.maxCoeff() / mod.minCoeff() > kCondLimit) return std::nullopt;
        return Quantity(f.ctx(), CMatrix(f.data().cwiseInverse()));
    }
    const RVector sv = linalg::singular_values(f.data());
    if (sv(sv.size() - 1) == 0.0 || sv(0) / sv(sv.size() - 1) > kCondLimit) return std::nullopt;
    return Quantity(f.ctx(), CMatrix(f.data().inverse()));
}

class MemberSet {
   public:
    explicit MemberSet(std::size_t cap) : cap_(cap) {}

    /// False once the cap is reached.
    bool add(Quantity q, std::string label) {
        const double scale = std::max(1.0, q.data().cwiseAbs().maxCoeff());
        for (const auto& m : items_) {
            if (max_abs_diff(m.q, q) <= 1e-12 * scale) return true;
        }
        if (items_.size() >= cap_) {
            full_ = true;
            return false;
        }
        const double norm = spectral_norm(q);
        items_.push_back({std::move(q), std::move(label), norm});
        return true;
    }

    const std::vector<Member>& items() const { return items_; }
    bool full() const { return full_; }

   private:
    std::size_t cap_;
    bool full_ = false;
    std::vector<Member> items_;
};

class RuleTally {
   public:
    explicit RuleTally(SharpnessReport& r) : r_(r) {}

    void record(SharpnessRule rule, const std::string& who, const RefValue& lhs, const RefValue& rhs,
                std::string note = {}) {
        double residual;
        if (!lhs.defined() || !rhs.defined()) {
            residual = kInf;
            note = "undefined value" + (note.empty() ? "" : "; " + note);
            const std::string& why = !lhs.defined() ? lhs.reason() : rhs.reason();
            if (!why.empty()) note += " (" + why + ")";
        } else {
            const Complex a = lhs.value();
            const Complex b = rhs.value();
            residual = std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
        }
        push(rule, who, residual, std::move(note));
    }

    void push(SharpnessRule rule, const std::string& who, double residual, std::string note) {
        auto& slot = r_.residuals[static_cast<std::size_t>(rule)];
        slot = std::max(slot, residual);
        if (residual > kSharpnessTol) {
            if (r_.witnesses.size() < kMaxWitnesses) {
                r_.witnesses.push_back({rule, who, residual, std::move(note)});
            } else {
                ++r_.witnesses_dropped;
            }
        }
    }

   private:
    SharpnessReport& r_;
};

}  // namespace

SharpnessReport check_sharpness(const Valuation& v, const std::vector<Quantity>& set, int closure_depth,
                                std::size_t max_members) {
    SharpnessReport report;
    report.closure_depth = closure_depth;
    RuleTally tally(report);

    MemberSet members(std::max<std::size_t>(max_members, set.size()));
    for (std::size_t k = 0; k < set.size(); ++k) {
        require_same_context(v.ctx(), set[k].ctx(), "check_sharpness");
        if (!is_hermitian(set[k])) {
            throw PreconditionError("check_sharpness: member f" + std::to_string(k + 1) + " is not Hermitian");
        }
        members.add(set[k], "f" + std::to_string(k + 1));
    }

    for (int round = 0; round < closure_depth && !members.full(); ++round) {
        const std::vector<Member> current = members.items();
        for (const auto& m : current) {
            if (!members.add(m.q * m.q, "(" + m.label + ")^2")) break;
            if (auto inv = inverse(m.q)) {
                if (!members.add(*inv, "(" + m.label + ")^-1")) break;
            }
        }
        for (std::size_t i = 0; i < current.size() && !members.full(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                if (!commute(current[i].q, current[i].norm, current[j].q, current[j].norm)) continue;
                if (!members.add(current[i].q + current[j].q, "(" + current[i].label + "+" + current[j].label + ")"))
                    break;
                if (!members.add(current[i].q - current[j].q, "(" + current[i].label + "-" + current[j].label + ")"))
                    break;
            }
        }
    }
    report.truncated = members.full();

    const auto& items = members.items();
    report.members = items.size();
    std::vector<RefValue> vals;
    vals.reserve(items.size());
    for (const auto& m : items) vals.push_back(value(v, m.q));

    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& f = items[i];
        const RefValue& vf = vals[i];
        // (SQ0) real values.
        if (!vf.defined()) {
            tally.push(SharpnessRule::SQ0, f.label, kInf, "undefined value (" + vf.reason() + ")");
        } else {
            const Complex c = vf.value();
            tally.push(SharpnessRule::SQ0, f.label, std::abs(c.imag()) / std::max(1.0, std::abs(c)), "imaginary value");
        }
        // (SQ1) squaring rule.
        tally.record(SharpnessRule::SQ1, f.label, value(v, f.q * f.q), vf * vf);
        // (SQ2) inverse rule.
        if (auto inv = inverse(f.q)) {
            if (vf.defined() && vf.value() == Complex(0.0)) {
                tally.push(SharpnessRule::SQ2, f.label, kInf, "invertible quantity with value 0");
            } else {
                const RefValue rhs = vf.defined() ? RefValue(1.0 / vf.value()) : vf;
                tally.record(SharpnessRule::SQ2, f.label, value(v, *inv), rhs);
            }
        }
        // (e.s2) affine rule with real alpha, beta.
        constexpr double alpha = 0.5;
        constexpr double beta = -2.0;
        tally.record(SharpnessRule::AffineRule, f.label, value(v, shift(beta * f.q, alpha)),
                     RefValue(alpha) + RefValue(beta) * vf);
    }

    std::vector<std::vector<bool>> commuting(items.size(), std::vector<bool>(items.size(), false));
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            commuting[i][j] = commuting[j][i] = commute(items[i].q, items[i].norm, items[j].q, items[j].norm);
        }
    }
    std::vector<std::pair<double, std::string>> lambdas;
    for (const double lambda : {1.0, -1.0, 0.5}) lambdas.emplace_back(lambda, "lambda = " + fmt(lambda));
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = 0; j < items.size(); ++j) {
            if (i == j || !commuting[i][j]) continue;
            const std::string who = items[i].label + ", " + items[j].label;
            // (SQ3) v(f + lambda g) = v(f) + lambda v(g).
            for (const auto& [lambda, note] : lambdas) {
                tally.record(SharpnessRule::SQ3, who, value(v, items[i].q + lambda * items[j].q),
                             vals[i] + RefValue(lambda) * vals[j], note);
            }
            // (e.s1) product rule.
            if (i < j) {
                tally.record(SharpnessRule::ProductRule, who, value(v, items[i].q * items[j].q), vals[i] * vals[j]);
            }
        }
    }

    report.verdict = std::all_of(report.residuals.begin(), report.residuals.end(),
                                 [](double r) { return r <= kSharpnessTol; });
    return report;
}

SpectrumReport spectrum_membership(const Valuation& v, const Quantity& f) {
    if (!is_hermitian(f)) {
        throw PreconditionError("spectrum_membership requires a Hermitian quantity");
    }
    const RefValue vf = value(v, f);
    if (!vf.defined()) {
        throw PreconditionError("spectrum_membership: v(f) is undefined (" + vf.reason() + ")");
    }
    const SharpnessReport sharp = check_sharpness(v, {f});
    if (!sharp.verdict) {
        std::string why = "f is not sharp in v";
        if (!sharp.witnesses.empty()) {
            const auto& w = sharp.witnesses.front();
            why += ": " + to_string(w.rule) + " fails on " + w.quantities + " (residual " + fmt(w.residual) + ")";
        }
        throw PreconditionError(why);
    }
    SpectrumReport r;
    r.value = vf.value().real();
    const Quantity shifted = Quantity::scalar(f.ctx(), r.value) - f;
    const RVector sv =
        f.is_diagonal() ? RVector(shifted.data().col(0).cwiseAbs()) : linalg::singular_values(shifted.data());
    r.min_singular_value = sv.minCoeff();
    r.is_eigenvalue = r.min_singular_value <= 1e-8 * std::max(1.0, spectral_norm(f));
    r.is_event = Event::residual(f) <= kLogicTol;
    r.dichotomic = std::abs(r.value) <= 1e-9 || std::abs(r.value - 1.0) <= 1e-9;
    return r;
}

NoGoReport mermin_peres_nogo(const Quadruple& f) {
    NoGoReport r;
    const AlgebraContext& ctx = f[0].ctx();
    const Quantity one = Quantity::identity(ctx);
    for (std::size_t j = 0; j < 4; ++j) {
        require_same_context(ctx, f[j].ctx(), "mermin_peres_nogo");
        r.relation_residual = std::max(r.relation_residual, spectral_norm(f[j] * f[j] - one));
        for (std::size_t k = j + 1; k < 4; ++k) {
            const Quantity jk = f[j] * f[k];
            const Quantity kj = f[k] * f[j];
            const double res = (k - j == 2) ? spectral_norm(jk + kj) : spectral_norm(jk - kj);
            r.relation_residual = std::max(r.relation_residual, res);
        }
    }
    r.relations_ok = r.relation_residual <= 1e-10;

    const Quantity p = f[0] * f[1] * f[2] * f[3];
    const Quantity q = f[0] * f[3] * f[1] * f[2];
    if (spectral_norm(q + p) <= 1e-10) {
        r.product_sign = -1;
    } else if (spectral_norm(q - p) <= 1e-10) {
        r.product_sign = 1;
    }

    for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 4> s{};
        for (int k = 0; k < 4; ++k) s[k] = (mask >> k) & 1 ? -1 : 1;
        // v(f1f2f3f4) through (f1f2)(f3f4); v(f1f4f2f3) through (f1f4)(f2f3).
        const int route_p = (s[0] * s[1]) * (s[2] * s[3]);
        const int route_q = (s[0] * s[3]) * (s[1] * s[2]);
        if (r.product_sign == 0 || route_q == r.product_sign * route_p) {
            ++r.consistent_assignments;
        }
    }
    return r;
}

SharpBellResult sharp_bell(const Valuation& v, const Quadruple& f) {
    const Quantity one = Quantity::identity(v.ctx());
    for (std::size_t k = 0; k < 4; ++k) {
        require_same_context(v.ctx(), f[k].ctx(), "sharp_bell");
        if (spectral_norm(f[k] * f[k] - one) > 1e-10) {
            throw PreconditionError("sharp_bell: f" + std::to_string(k + 1) + "^2 = 1 violated");
        }
    }
    constexpr std::array<std::pair<int, int>, 4> pairs{{{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
    for (const auto& [j, k] : pairs) {
        if (spectral_norm(commutator(f[j], f[k])) > 1e-10) {
            throw PreconditionError("sharp_bell: f" + std::to_string(j + 1) + " and f" + std::to_string(k + 1) +
                                    " do not commute");
        }
        if (!value(v, f[j] * f[k]).defined()) {
            throw PreconditionError("sharp_bell: v(f" + std::to_string(j + 1) + "f" + std::to_string(k + 1) +
                                    ") is undefined");
        }
    }
    SharpBellResult out;
    for (std::size_t k = 0; k < 4; ++k) {
        const RefValue vk = value(v, f[k]);
        if (!vk.defined()) {
            throw PreconditionError("sharp_bell: v(f" + std::to_string(k + 1) + ") is undefined (" + vk.reason() + ")");
        }
        out.values[k] = vk.value().real();
    }
    const SharpnessReport sharp = check_sharpness(v, {f[0], f[1], f[2], f[3]}, 1);
    if (!sharp.verdict) {
        std::string why = "sharp_bell: the set {f1..f4} is not sharp in v";
        if (!sharp.witnesses.empty()) {
            const auto& w = sharp.witnesses.front();
            why += "; " + to_string(w.rule) + " fails on " + w.quantities + " (residual " + fmt(w.residual) + ")";
        }
        throw PreconditionError(why);
    }
    const auto& x = out.values;
    out.gamma = std::abs(x[0] * x[1] + x[1] * x[2] + x[2] * x[3] - x[0] * x[3]);
    out.holds = out.gamma <= 2.0 + 1e-9;
    return out;
}

double uncertainty_measure(const Valuation& v, const Quantity& f) {
    if (v.kind() != ValuationKind::EnsembleState) {
        throw PreconditionError("the uncertainty measure is defined for ensemble states");
    }
    const double vf = value(v, f).value().real();
    const double vf2 = value(v, f * f).value().real();
    return std::sqrt(std::max(0.0, vf2 - vf * vf));
}

ProductRuleCheck approx_product_rule(const Valuation& v, const Quantity& f, const Quantity& g) {
    if (v.kind() != ValuationKind::EnsembleState) {
        throw PreconditionError("approx_product_rule requires an ensemble state");
    }
    if (!is_hermitian(f) || !is_hermitian(g)) {
        throw PreconditionError("approx_product_rule requires Hermitian f and g");
    }
    if (!commute(f, g)) {
        throw PreconditionError("approx_product_rule requires commuting f and g: ||[f,g]|| = " +
                                fmt(spectral_norm(commutator(f, g))));
    }
    ProductRuleCheck r;
    r.lhs = std::abs(value(v, f * g).value() - value(v, f).value() * value(v, g).value());
    r.bound = uncertainty_measure(v, f) * uncertainty_measure(v, g);
    r.holds = r.lhs <= r.bound + 1e-10;
    return r;
}

}  // namespace qalg
