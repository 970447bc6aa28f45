#ifndef SWCALC_LAURENT_HPP
#define SWCALC_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "swcalc/numeric.hpp"

namespace swcalc::rings {

// Element of Z[z, z^-1], the representation ring R(T) of the circle.
// Sparse exponent -> coefficient map; stored coefficients are never zero,
// so the zero element is the empty map.  Immutable value semantics: every
// operation returns a fresh canonical element.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly monomial(Int coeff, long exponent);
    static LaurentPoly z(long exponent = 1);  // z^exponent

    const std::map<long, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(long exponent) const;

    // Lowest/highest stored exponent; requires a nonzero element.
    long min_exp() const;
    long max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly pow(unsigned long k) const;

    bool operator==(const LaurentPoly& rhs) const = default;

    // Terms in ascending exponent order, e.g. "1 - 3z + 3z^2 - z^3".
    std::string str() const;

private:
    std::map<long, Int> coeffs_;

    void add_term(long exponent, const Int& coeff);
};

// Exact quotient over the Laurent ring: returns r with q*r = p when such an
// r with integer coefficients exists, nullopt otherwise.  Monomials z^k are
// units, so divisibility is decided after stripping them.  q must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p,
                                        const LaurentPoly& q);

}  // namespace swcalc::rings

#endif
