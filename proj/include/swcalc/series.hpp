#ifndef SWCALC_SERIES_HPP
#define SWCALC_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "swcalc/numeric.hpp"

namespace swcalc::rings {

// Power series over Q truncated at an explicit order: the element is known
// modulo z^order and carries exactly `order` coefficients (z^0 .. z^{order-1}),
// each in lowest terms with positive denominator.  Binary operations narrow
// to the minimum order of the operands, so precision loss is always explicit.
class RatSeries {
public:
    // coeffs may be shorter than order (padded with zeros), never longer.
    RatSeries(std::size_t order, std::vector<Rat> coeffs);

    static RatSeries one(std::size_t order);
    static RatSeries zero(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(std::size_t i) const { return coeffs_.at(i); }

    RatSeries truncate(std::size_t order) const;

    RatSeries operator+(const RatSeries& rhs) const;
    RatSeries operator-(const RatSeries& rhs) const;
    RatSeries operator*(const RatSeries& rhs) const;
    RatSeries pow(unsigned long m) const;

    bool operator==(const RatSeries& rhs) const = default;

    std::string str() const;  // "1 + 1/2 z - 1/12 z^2 + ..."

private:
    std::vector<Rat> coeffs_;
};

// Quotient num/den to order min(orders).  Requires den(0) != 0; the result
// is re-multiplied against den as a self-check before being returned.
RatSeries series_div(const RatSeries& num, const RatSeries& den);

// Multiplicative inverse to the order of s; requires s(0) != 0.
RatSeries series_inverse(const RatSeries& s);

}  // namespace swcalc::rings

#endif
