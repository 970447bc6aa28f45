#ifndef SWCALC_TESTS_SUPPORT_HPP
#define SWCALC_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "swcalc/laurent.hpp"
#include "swcalc/pin_ring.hpp"
#include "swcalc/series.hpp"

namespace testsupport {

using swcalc::Int;
using swcalc::Rat;
using swcalc::rings::LaurentPoly;
using swcalc::rings::PinElem;
using swcalc::rings::RatSeries;

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5ca1ab1e);
    return gen;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline LaurentPoly random_laurent() {
    LaurentPoly p;
    const long terms = rand_int(0, 4);
    for (long i = 0; i < terms; ++i)
        p = p + LaurentPoly::monomial(Int(rand_int(-9, 9)), rand_int(-5, 5));
    return p;
}

inline PinElem random_pin() {
    PinElem e(Int(rand_int(-9, 9)));
    e = e + PinElem(Int(rand_int(-9, 9))) * PinElem::lambda();
    const long terms = rand_int(0, 3);
    for (long i = 0; i < terms; ++i) {
        const long c = rand_int(-9, 9);
        if (c != 0) e = e + PinElem(Int(c)) * PinElem::h(rand_int(1, 5));
    }
    return e;
}

inline RatSeries random_series(std::size_t order, bool invertible = false) {
    std::vector<Rat> c(order);
    for (std::size_t i = 0; i < order; ++i)
        c[i] = swcalc::make_rat(Int(rand_int(-9, 9)), Int(rand_int(1, 9)));
    if (invertible && c[0] == 0) c[0] = Rat(1);
    return RatSeries(order, std::move(c));
}

}  // namespace testsupport

#endif
