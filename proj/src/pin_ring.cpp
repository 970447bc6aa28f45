#include "swcalc/pin_ring.hpp"

#include <stdexcept>

namespace swcalc::rings {

PinElem PinElem::lambda() {
    PinElem e;
    e.lambda_ = 1;
    return e;
}

PinElem PinElem::h(long power) {
    if (power < 1) throw std::invalid_argument("h power must be >= 1");
    PinElem e;
    e.h_[power] = 1;
    return e;
}

void PinElem::add_h(long power, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = h_.emplace(power, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) h_.erase(it);
    }
}

PinElem PinElem::operator-() const {
    PinElem r;
    r.unit_ = -unit_;
    r.lambda_ = -lambda_;
    for (const auto& [k, c] : h_) r.h_[k] = -c;
    return r;
}

PinElem PinElem::operator+(const PinElem& rhs) const {
    PinElem r = *this;
    r.unit_ += rhs.unit_;
    r.lambda_ += rhs.lambda_;
    for (const auto& [k, c] : rhs.h_) r.add_h(k, c);
    return r;
}

PinElem PinElem::operator-(const PinElem& rhs) const {
    return *this + (-rhs);
}

PinElem PinElem::operator*(const PinElem& rhs) const {
    PinElem r;
    // (c0 + c0'λ)(d0 + d0'λ) with λ² = 1:
    r.unit_ = unit_ * rhs.unit_ + lambda_ * rhs.lambda_;
    r.lambda_ = unit_ * rhs.lambda_ + lambda_ * rhs.unit_;
    // λ·h^k = h^k folds both unit and lambda parts onto the h-part:
    const Int left_scalar = unit_ + lambda_;
    const Int right_scalar = rhs.unit_ + rhs.lambda_;
    for (const auto& [k, c] : rhs.h_) r.add_h(k, left_scalar * c);
    for (const auto& [k, c] : h_) r.add_h(k, right_scalar * c);
    for (const auto& [j, cj] : h_)
        for (const auto& [k, ck] : rhs.h_) r.add_h(j + k, cj * ck);
    return r;
}

PinElem PinElem::pow(unsigned long k) const {
    PinElem result(Int(1));
    PinElem base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::string PinElem::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    auto term = [&](const Int& c, const std::string& sym) {
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
        if (sym.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str();
            out += sym;
        }
    };
    if (unit_ != 0) term(unit_, "");
    if (lambda_ != 0) term(lambda_, "λ");
    for (const auto& [k, c] : h_)
        term(c, k == 1 ? "h" : "h^" + std::to_string(k));
    return out;
}

LaurentPoly restrict_to_torus(const PinElem& a) {
    // λ restricts to the trivial character (it is a sign character on the
    // component group), h to the character of the quaternions as a
    // T-representation, z + z^-1.
    LaurentPoly result(a.unit_coeff() + a.lambda_coeff());
    const LaurentPoly h_char = LaurentPoly::z(1) + LaurentPoly::z(-1);
    for (const auto& [k, c] : a.h_coeffs())
        result = result + LaurentPoly(c) * h_char.pow(static_cast<unsigned long>(k));
    return result;
}

Int eval_at_j(const PinElem& a) {
    return a.unit_coeff() - a.lambda_coeff();
}

}  // namespace swcalc::rings
