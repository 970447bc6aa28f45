#include "swcalc/james.hpp"

#include <stdexcept>

namespace swcalc::james {

using rings::RatSeries;

rings::RatSeries log_series(std::size_t order) {
    if (order < 2)
        throw std::invalid_argument("log(1+z) needs truncation order >= 2");
    std::vector<Rat> c(order, Rat(0));
    for (std::size_t i = 1; i < order; ++i) {
        c[i] = make_rat(i % 2 == 1 ? 1 : -1, static_cast<long>(i));
    }
    return RatSeries(order, std::move(c));
}

namespace {

// log(1+z)/z to the given order: coefficient of z^i is (-1)^i/(i+1).
RatSeries log_over_z(std::size_t order) {
    std::vector<Rat> c(order);
    for (std::size_t i = 0; i < order; ++i)
        c[i] = make_rat(i % 2 == 0 ? 1 : -1, static_cast<long>(i) + 1);
    return RatSeries(order, std::move(c));
}

void check_args(long m, long n) {
    if (m < 0) throw std::invalid_argument("power m must be >= 0");
    if (n < 1) throw std::invalid_argument("truncation order n must be >= 1");
}

}  // namespace

RatSeries james_series(long m, std::size_t order) {
    const RatSeries base = series_inverse(log_over_z(order));
    return base.pow(static_cast<unsigned long>(m));
}

Int denominator_lcm(const RatSeries& s) {
    Int u = 1;
    for (const Rat& c : s.coeffs()) u = lcm(u, c.get_den());
    return u;
}

Int james_lower_bound(long m, long n) {
    check_args(m, n);
    return denominator_lcm(james_series(m, static_cast<std::size_t>(n)));
}

Int james_oracle(long m, long n) {
    check_args(m, n);
    const std::size_t order = static_cast<std::size_t>(n);

    // Power first, naively: g = (log(1+z)/z)^m as repeated convolution.
    RatSeries g = RatSeries::one(order);
    const RatSeries base = log_over_z(order);
    for (long i = 0; i < m; ++i) g = g * base;

    // Then the triangular solve for S with g * S = 1.
    std::vector<Rat> s(order, Rat(0));
    s[0] = Rat(1) / g.coeff(0);
    Int u = s[0].get_den();
    for (std::size_t i = 1; i < order; ++i) {
        Rat acc(0);
        for (std::size_t j = 1; j <= i; ++j) acc += g.coeff(j) * s[i - j];
        s[i] = -acc / g.coeff(0);
        u = lcm(u, s[i].get_den());
    }
    return u;
}

}  // namespace swcalc::james
