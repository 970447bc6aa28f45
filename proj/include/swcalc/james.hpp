#ifndef SWCALC_JAMES_HPP
#define SWCALC_JAMES_HPP

#include "swcalc/numeric.hpp"
#include "swcalc/series.hpp"

namespace swcalc::james {

// Mercator series log(1+z) = z - z^2/2 + z^3/3 - ... truncated at `order`
// (order >= 2, so the linear term is present).
rings::RatSeries log_series(std::size_t order);

// (z/log(1+z))^m modulo z^order, by inverting log(1+z)/z and powering.
rings::RatSeries james_series(long m, std::size_t order);

// lcm of the denominators of the coefficients of z^0..z^{n-1} in
// (z/log(1+z))^m: the minimal positive integer U making the truncated
// series integral, a lower bound for the stable James number.
Int james_lower_bound(long m, long n);

// Same value by a structurally different route: (log(1+z)/z)^m is expanded
// directly (chained convolutions) and S with (log(1+z)/z)^m * S = 1 is
// found by forward substitution.
Int james_oracle(long m, long n);

// lcm of coefficient denominators of the whole series.
Int denominator_lcm(const rings::RatSeries& s);

}  // namespace swcalc::james

#endif
