#ifndef SWCALC_PIN_RING_HPP
#define SWCALC_PIN_RING_HPP

#include <map>
#include <string>

#include "swcalc/laurent.hpp"
#include "swcalc/numeric.hpp"

namespace swcalc::rings {

// Element of R(Pin(2)) = Z[lambda, h] / (lambda^2 - 1, lambda*h - h) in the
// unique normal form  c0 + c0'*lambda + sum_{k>=1} c_k h^k.  The basis
// {1, lambda, h, h^2, ...} is free over Z, so equality is coefficientwise.
//
// Multiplication rules: lambda*lambda = 1, lambda*h^k = h^k (k >= 1),
// h^j*h^k = h^{j+k}.
class PinElem {
public:
    PinElem() = default;
    explicit PinElem(Int constant) : unit_(std::move(constant)) {}
    explicit PinElem(long constant) : unit_(constant) {}

    static PinElem lambda();
    static PinElem h(long power = 1);  // h^power, power >= 1

    const Int& unit_coeff() const { return unit_; }
    const Int& lambda_coeff() const { return lambda_; }
    const std::map<long, Int>& h_coeffs() const { return h_; }
    bool is_zero() const { return unit_ == 0 && lambda_ == 0 && h_.empty(); }

    PinElem operator-() const;
    PinElem operator+(const PinElem& rhs) const;
    PinElem operator-(const PinElem& rhs) const;
    PinElem operator*(const PinElem& rhs) const;
    PinElem pow(unsigned long k) const;

    bool operator==(const PinElem& rhs) const = default;

    std::string str() const;  // e.g. "2 - 2λ", "4 + h^2"

private:
    Int unit_ = 0;
    Int lambda_ = 0;
    std::map<long, Int> h_;  // power >= 1 -> coefficient, never zero

    void add_h(long power, const Int& coeff);
};

// Restriction homomorphism R(Pin(2)) -> R(T): lambda -> 1, h -> z + z^-1.
LaurentPoly restrict_to_torus(const PinElem& a);

// Character value at the element j: lambda -> -1, h -> 0.
Int eval_at_j(const PinElem& a);

}  // namespace swcalc::rings

#endif
