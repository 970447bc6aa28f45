#include "swcalc/laurent.hpp"

#include <stdexcept>
#include <vector>

namespace swcalc::rings {

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, long exponent) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
    return p;
}

LaurentPoly LaurentPoly::z(long exponent) { return monomial(Int(1), exponent); }

Int LaurentPoly::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(long exponent, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
    LaurentPoly result(Int(1));
    LaurentPoly base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str();
            out += "z";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p,
                                        const LaurentPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("division by zero in R(T)");
    if (p.is_zero()) return LaurentPoly{};

    // Strip units z^k so both operands become ordinary polynomials with
    // nonzero constant term; the exponent shift transfers to the quotient.
    const long shift = p.min_exp() - q.min_exp();
    const long pm = p.min_exp(), qm = q.min_exp();
    std::vector<Rat> num(static_cast<std::size_t>(p.max_exp() - pm) + 1);
    std::vector<Int> den(static_cast<std::size_t>(q.max_exp() - qm) + 1);
    for (const auto& [e, c] : p.coeffs()) num[static_cast<std::size_t>(e - pm)] = Rat(c);
    for (const auto& [e, c] : q.coeffs()) den[static_cast<std::size_t>(e - qm)] = c;

    if (num.size() < den.size()) return std::nullopt;

    // Long division over Q from the top; exactness requires a zero
    // remainder and integral quotient coefficients.
    const std::size_t qlen = num.size() - den.size() + 1;
    std::vector<Rat> quot(qlen);
    const Rat lead(den.back());
    for (std::size_t i = qlen; i-- > 0;) {
        Rat c = num[i + den.size() - 1] / lead;
        quot[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j)
                num[i + j] -= c * Rat(den[j]);
    }
    for (const Rat& r : num)
        if (r != 0) return std::nullopt;

    LaurentPoly result;
    for (std::size_t i = 0; i < qlen; ++i) {
        if (quot[i] == 0) continue;
        if (quot[i].get_den() != 1) return std::nullopt;
        result = result + LaurentPoly::monomial(quot[i].get_num(),
                                                static_cast<long>(i) + shift);
    }
    return result;
}

}  // namespace swcalc::rings
