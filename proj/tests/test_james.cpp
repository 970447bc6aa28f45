#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swcalc/james.hpp"
#include "swcalc/series.hpp"

using namespace swcalc;
using rings::RatSeries;

namespace {

// Second, independent route to 1/f: Newton iteration g <- g(2 - fg),
// doubling the correct order each step.
RatSeries newton_inverse(const RatSeries& f) {
    REQUIRE(f.coeff(0) != 0);
    RatSeries g(1, {Rat(1) / f.coeff(0)});
    std::size_t correct = 1;
    while (correct < f.order()) {
        correct = std::min(2 * correct, f.order());
        const RatSeries fk = f.truncate(correct);
        // pad g up to the new order
        std::vector<Rat> c = g.coeffs();
        c.resize(correct, Rat(0));
        RatSeries gk(correct, std::move(c));
        gk = gk * (RatSeries(correct, {Rat(2)}) - fk * gk);
        g = gk;
    }
    return g;
}

RatSeries log_over_z(std::size_t order) {
    std::vector<Rat> c(order);
    for (std::size_t i = 0; i < order; ++i)
        c[i] = make_rat(Int(i % 2 == 0 ? 1 : -1), Int(i + 1));
    return RatSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("log(1+z) truncations") {
    const RatSeries l4 = james::log_series(4);
    CHECK(l4.coeff(0) == 0);
    CHECK(l4.coeff(1) == 1);
    CHECK(l4.coeff(2) == make_rat(-1, 2));
    CHECK(l4.coeff(3) == make_rat(1, 3));

    const RatSeries l6 = james::log_series(6);
    CHECK(l6.coeff(4) == make_rat(-1, 4));
    CHECK(l6.coeff(5) == make_rat(1, 5));

    CHECK_THROWS_AS(james::log_series(1), std::invalid_argument);
}

TEST_CASE("z/log(1+z) expansion, frozen against Newton inversion") {
    const RatSeries s = james::james_series(1, 6);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == make_rat(1, 2));
    CHECK(s.coeff(2) == make_rat(-1, 12));
    CHECK(s.coeff(3) == make_rat(1, 24));
    CHECK(s.coeff(4) == make_rat(-19, 720));
    CHECK(s.coeff(5) == make_rat(3, 160));

    for (std::size_t order : {3u, 7u, 16u, 33u})
        CHECK(james::james_series(1, order) == newton_inverse(log_over_z(order)));
}

TEST_CASE("lower bound values") {
    CHECK(james::james_lower_bound(1, 1) == 1);
    CHECK(james::james_lower_bound(1, 2) == 2);
    CHECK(james::james_lower_bound(1, 3) == 12);
    CHECK(james::james_lower_bound(1, 4) == 24);
    CHECK(james::james_lower_bound(1, 5) == 720);
    CHECK(james::james_lower_bound(1, 10) == 7257600);
    CHECK(james::james_lower_bound(2, 3) == 12);
    CHECK(james::james_lower_bound(2, 5) == 240);
    CHECK(james::james_lower_bound(3, 6) == 480);
    CHECK(james::james_lower_bound(8, 10) == 1209600);
    for (long m : {0L, 1L, 3L, 8L}) CHECK(james::james_lower_bound(m, 1) == 1);
    CHECK(james::james_lower_bound(0, 10) == 1);

    CHECK_THROWS_AS(james::james_lower_bound(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(james::james_lower_bound(-1, 3), std::invalid_argument);
}

TEST_CASE("oracle equivalence and monotone divisibility, m <= 8, n <= 40") {
    for (long m = 0; m <= 8; ++m) {
        Int prev = 1;
        for (long n = 1; n <= 40; ++n) {
            const Int u = james::james_lower_bound(m, n);
            CHECK(u == james::james_oracle(m, n));
            CHECK(u % prev == 0);  // denominators only accumulate
            prev = u;
        }
    }
}

TEST_CASE("U is minimal: scaling by U clears denominators, by U/p never") {
    for (long m : {1L, 2L, 5L}) {
        for (long n : {3L, 5L, 9L, 14L}) {
            const RatSeries s = james::james_series(m, static_cast<std::size_t>(n));
            const Int u = james::james_lower_bound(m, n);
            for (const Rat& c : s.coeffs()) {
                const Rat scaled = c * Rat(u);
                CHECK(scaled.get_den() == 1);
            }
            if (u == 1) continue;
            // every proper maximal divisor u/p leaves a denominator standing
            std::vector<Int> primes;
            Int w = u;
            for (Int p = 2; p * p <= w; ++p)
                if (w % p == 0) {
                    primes.push_back(p);
                    while (w % p == 0) w /= p;
                }
            if (w > 1) primes.push_back(w);
            for (const Int& p : primes) {
                const Int v = u / p;
                bool all_integral = true;
                for (const Rat& c : s.coeffs()) {
                    const Rat scaled = c * Rat(v);
                    if (scaled.get_den() != 1) all_integral = false;
                }
                CHECK_FALSE(all_integral);
            }
        }
    }
}
