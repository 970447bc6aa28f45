#ifndef SWCALC_RING_EXPR_HPP
#define SWCALC_RING_EXPR_HPP

#include <string>

#include "swcalc/laurent.hpp"
#include "swcalc/pin_ring.hpp"

namespace swcalc::expr {

// Infix expressions over {+, -, *, ^, integers, parentheses} plus the ring
// generator(s): z (with integer, possibly negative, exponents) for R(T);
// λ (also accepted as "lambda" or "l") and h for R(Pin(2)).  Adjacent
// factors multiply, so "2z" and "3(1-z)" parse.  No division — the grammar
// exists to exercise the ring cores, not to be a CAS.
rings::LaurentPoly parse_torus(const std::string& text);   // throws ExprParseError
rings::PinElem parse_pin(const std::string& text);         // throws ExprParseError

}  // namespace swcalc::expr

#endif
