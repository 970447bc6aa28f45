#include "swcalc/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "swcalc/errors.hpp"

namespace swcalc::ktheory {

using rings::LaurentPoly;
using rings::PinElem;

TRep::TRep(std::vector<long> w) : weights(std::move(w)) {
    std::sort(weights.begin(), weights.end());
}

TRep TRep::standard(std::size_t copies) {
    return TRep(std::vector<long>(copies, 1));
}

TRep TRep::direct_sum(const TRep& other) const {
    std::vector<long> w = weights;
    w.insert(w.end(), other.weights.begin(), other.weights.end());
    return TRep(std::move(w));
}

LaurentPoly euler_class(const TRep& v) {
    LaurentPoly e{Int(1)};
    for (long w : v.weights)
        e = e * (LaurentPoly(Int(1)) - LaurentPoly::z(w));
    return e;
}

PinElem euler_class(const Pin2Rep& v) {
    if (v.trivial_count < 0 || v.lambda_count < 0 || v.h_count < 0)
        throw std::invalid_argument("negative multiplicity in Pin(2) representation");
    if (v.trivial_count > 0) return PinElem{};
    const PinElem one_minus_lambda = PinElem(Int(1)) - PinElem::lambda();
    const PinElem two_minus_h = PinElem(Int(2)) - PinElem::h();
    return one_minus_lambda.pow(static_cast<unsigned long>(v.lambda_count)) *
           two_minus_h.pow(static_cast<unsigned long>(v.h_count));
}

std::optional<LaurentPoly> k_degree(const Int& fixed_degree, const TRep& source,
                                    const TRep& target) {
    auto has_zero = [](const TRep& r) {
        return std::find(r.weights.begin(), r.weights.end(), 0L) != r.weights.end();
    };
    if (has_zero(source) || has_zero(target))
        throw std::invalid_argument(
            "k_degree requires fixed parts stripped (no zero weights)");
    const LaurentPoly numerator = LaurentPoly(fixed_degree) * euler_class(target);
    return rings::divide_exact(numerator, euler_class(source));
}

DegreeVerdict degree1_verdict(long /*n*/, long /*m*/, long l, const Int& d) {
    if (d == 0)
        throw std::invalid_argument(
            "zero fixed-point degree carries no constraint");
    if (l < 0) return {DegreeVerdict::Kind::Impossible, 0};
    if (l == 0) return {DegreeVerdict::Kind::DegreeForced, d};
    return {DegreeVerdict::Kind::NoConstraint, 0};
}

namespace {

void check_spin_signature(long sign) {
    if (sign >= 0)
        throw MathConstraintError("signature must be negative");
    if (mod_floor(sign, 16) != 0)
        throw MathConstraintError(
            "signature of a spin 4-manifold must be divisible by 16");
}

// Chained multiplication on purpose: the reduction path through the
// quotient relations is the computation, the closed form only checks it.
PinElem pow_by_products(const PinElem& base, long k) {
    PinElem r{Int(1)};
    for (long i = 0; i < k; ++i) r = r * base;
    return r;
}

}  // namespace

FurutaDerivation furuta_derivation(long sign, long b_plus) {
    check_spin_signature(sign);
    if (b_plus < 0) throw std::invalid_argument("b+ must be >= 0");

    FurutaDerivation deriv;
    deriv.d_h = -sign / 8;

    const PinElem one_minus_lambda = PinElem(Int(1)) - PinElem::lambda();
    const PinElem two_minus_h = PinElem(Int(2)) - PinElem::h();

    deriv.lhs = pow_by_products(one_minus_lambda, b_plus + 1);
    deriv.rhs_base =
        PinElem(Int(2)) * pow_by_products(two_minus_h, deriv.d_h) * one_minus_lambda;

    // Coefficient matching for lhs = a * rhs_base over Z.
    auto ratio = [&]() -> std::optional<Int> {
        std::optional<Int> a;
        auto match = [&](const Int& num, const Int& den) -> bool {
            if (den == 0) return num == 0;
            if (num % den != 0) return false;
            Int q = num / den;
            if (a && *a != q) return false;
            a = q;
            return true;
        };
        if (!match(deriv.lhs.unit_coeff(), deriv.rhs_base.unit_coeff()))
            return std::nullopt;
        if (!match(deriv.lhs.lambda_coeff(), deriv.rhs_base.lambda_coeff()))
            return std::nullopt;
        // Either side may carry h-terms the other lacks.
        for (const auto& [k, c] : deriv.lhs.h_coeffs()) {
            Int den = 0;
            if (auto it = deriv.rhs_base.h_coeffs().find(k);
                it != deriv.rhs_base.h_coeffs().end())
                den = it->second;
            if (!match(c, den)) return std::nullopt;
        }
        for (const auto& [k, c] : deriv.rhs_base.h_coeffs())
            if (deriv.lhs.h_coeffs().find(k) == deriv.lhs.h_coeffs().end())
                if (!match(Int(0), c)) return std::nullopt;
        if (!a) return std::nullopt;
        // Scaling the zero element matches any a; pin it to 0.
        if (deriv.rhs_base.is_zero()) return Int(0);
        return a;
    };
    deriv.a = ratio();
    return deriv;
}

std::optional<Int> furuta_solve(long sign, long b_plus) {
    return furuta_derivation(sign, b_plus).a;
}

long furuta_bound(long sign) {
    check_spin_signature(sign);
    return 2 - (5 * sign) / 4;
}

long refined_furuta_bound(long sign) {
    check_spin_signature(sign);
    if (sign == -64) return 88;
    long a = 1;
    if (mod_floor(sign, 64) == 32)
        a = 2;
    else if (mod_floor(std::abs(sign), 64) == 48)
        a = 3;
    return 2 * a - (5 * sign) / 4;
}

}  // namespace swcalc::ktheory
