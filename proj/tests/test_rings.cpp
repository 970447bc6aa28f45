#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "swcalc/laurent.hpp"
#include "swcalc/pin_ring.hpp"
#include "swcalc/series.hpp"

using namespace swcalc;
using rings::LaurentPoly;
using rings::PinElem;
using rings::RatSeries;
using testsupport::random_laurent;
using testsupport::random_pin;
using testsupport::random_series;

namespace {

// Independent multiplication oracle: dense coefficient arrays with an
// explicit offset, convolved index by index.
struct Dense {
    long offset = 0;
    std::vector<Int> coeffs;
};

Dense to_dense(const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    d.offset = p.min_exp();
    d.coeffs.assign(static_cast<std::size_t>(p.max_exp() - p.min_exp()) + 1, Int(0));
    for (const auto& [e, c] : p.coeffs())
        d.coeffs[static_cast<std::size_t>(e - d.offset)] = c;
    return d;
}

LaurentPoly convolve_oracle(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly{};
    const Dense da = to_dense(a), db = to_dense(b);
    std::vector<Int> out(da.coeffs.size() + db.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < da.coeffs.size(); ++i)
        for (std::size_t j = 0; j < db.coeffs.size(); ++j)
            out[i + j] += da.coeffs[i] * db.coeffs[j];
    LaurentPoly p;
    for (std::size_t k = 0; k < out.size(); ++k)
        p = p + LaurentPoly::monomial(out[k],
                                      static_cast<long>(k) + da.offset + db.offset);
    return p;
}

LaurentPoly one_minus_z() { return LaurentPoly(Int(1)) - LaurentPoly::z(); }

}  // namespace

TEST_CASE("laurent multiplication matches stated expansions") {
    CHECK(one_minus_z() * one_minus_z() ==
          LaurentPoly(Int(1)) - LaurentPoly::monomial(Int(2), 1) +
              LaurentPoly::monomial(Int(1), 2));

    // (1-z)(1+z+z^2) = 1 - z^3, frozen from the convolution oracle.
    const LaurentPoly geom =
        LaurentPoly(Int(1)) + LaurentPoly::z(1) + LaurentPoly::z(2);
    const LaurentPoly expected = LaurentPoly(Int(1)) - LaurentPoly::z(3);
    CHECK(convolve_oracle(one_minus_z(), geom) == expected);
    CHECK(one_minus_z() * geom == expected);

    for (int i = 0; i < 200; ++i) {
        const LaurentPoly p = random_laurent();
        CHECK(p * LaurentPoly(Int(1)) == p);  // unit law
        const LaurentPoly q = random_laurent();
        CHECK(p * q == convolve_oracle(p, q));
    }
}

TEST_CASE("laurent ring axioms on random triples") {
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = random_laurent(), b = random_laurent(),
                          c = random_laurent();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("laurent exact division") {
    const LaurentPoly five_cubed =
        LaurentPoly(Int(5)) * one_minus_z().pow(3);
    auto q = rings::divide_exact(five_cubed, one_minus_z().pow(2));
    REQUIRE(q.has_value());
    CHECK(*q == LaurentPoly(Int(5)) * one_minus_z());

    CHECK_FALSE(rings::divide_exact(one_minus_z(), one_minus_z().pow(2)));

    const LaurentPoly p = LaurentPoly(Int(1)) - LaurentPoly::z(3);
    auto r = rings::divide_exact(p, one_minus_z());
    REQUIRE(r.has_value());
    CHECK(*r == LaurentPoly(Int(1)) + LaurentPoly::z(1) + LaurentPoly::z(2));
    CHECK(*r * one_minus_z() == p);  // re-multiplication check

    // Units are invertible: shifting by z^k never blocks divisibility.
    auto shifted = rings::divide_exact(
        LaurentPoly::monomial(Int(1), -3) * five_cubed, one_minus_z());
    REQUIRE(shifted.has_value());

    // 2 does not divide 3z, and (1-z) does not divide a nonzero constant.
    CHECK_FALSE(rings::divide_exact(LaurentPoly::monomial(Int(3), 1),
                                    LaurentPoly(Int(2))));
    CHECK_FALSE(rings::divide_exact(LaurentPoly(Int(7)), one_minus_z()));
}

TEST_CASE("laurent division recovers the dividend on random products") {
    int successes = 0;
    for (int i = 0; i < 300; ++i) {
        const LaurentPoly a = random_laurent(), b = random_laurent();
        if (b.is_zero()) continue;
        const LaurentPoly prod = a * b;
        auto q = rings::divide_exact(prod, b);
        REQUIRE(q.has_value());
        CHECK(*q * b == prod);
        CHECK(*q == a);
        ++successes;
    }
    CHECK(successes > 200);
}

TEST_CASE("pin ring normal form identities") {
    const PinElem one(Int(1));
    const PinElem lam = PinElem::lambda();
    const PinElem h = PinElem::h();
    const PinElem oml = one - lam;  // 1 - λ

    CHECK(oml * oml == PinElem(Int(2)) * oml);
    CHECK(h * oml == PinElem{});
    CHECK((PinElem(Int(2)) - h) * oml == PinElem(Int(2)) * oml);

    // (2-h)^k (1-λ) = 2^k (1-λ), exactly, for k <= 64.
    PinElem power = one;
    Int two_k = 1;
    for (int k = 0; k <= 64; ++k) {
        CHECK(power * oml == PinElem(two_k) * oml);
        power = power * (PinElem(Int(2)) - h);
        two_k *= 2;
    }

    // λ h^k = h^k under the quotient relations.
    for (long k = 1; k <= 8; ++k) CHECK(lam * PinElem::h(k) == PinElem::h(k));
}

TEST_CASE("pin ring axioms on random triples") {
    for (int i = 0; i < 200; ++i) {
        const PinElem a = random_pin(), b = random_pin(), c = random_pin();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * PinElem(Int(1)) == a);
    }
}

TEST_CASE("restriction to the torus and evaluation at j are ring maps") {
    // λ restricts to 1, so 1-λ restricts to 0.
    CHECK(rings::restrict_to_torus(PinElem::lambda()) == LaurentPoly(Int(1)));
    CHECK(rings::restrict_to_torus(PinElem(Int(1)) - PinElem::lambda()) ==
          LaurentPoly{});

    // 2 - h restricts to 2 - z - z^-1 = -z^-1 (1-z)^2.
    const LaurentPoly r =
        rings::restrict_to_torus(PinElem(Int(2)) - PinElem::h());
    CHECK(r == LaurentPoly(Int(2)) - LaurentPoly::z(1) - LaurentPoly::z(-1));
    CHECK(r == LaurentPoly::monomial(Int(-1), -1) * one_minus_z().pow(2));

    CHECK(rings::eval_at_j(PinElem(Int(1)) - PinElem::lambda()) == 2);
    CHECK(rings::eval_at_j((PinElem(Int(2)) - PinElem::h()).pow(5)) == 32);

    // (1-λ)^{b+1} evaluates to 2^{b+1}, via chained products.
    PinElem p(Int(1));
    Int expect = 1;
    for (int b = 0; b <= 20; ++b) {
        p = p * (PinElem(Int(1)) - PinElem::lambda());
        expect *= 2;
        CHECK(rings::eval_at_j(p) == expect);
    }

    for (int i = 0; i < 1000; ++i) {
        const PinElem a = random_pin(), b = random_pin();
        CHECK(rings::restrict_to_torus(a * b) ==
              rings::restrict_to_torus(a) * rings::restrict_to_torus(b));
        CHECK(rings::restrict_to_torus(a + b) ==
              rings::restrict_to_torus(a) + rings::restrict_to_torus(b));
        CHECK(rings::eval_at_j(a * b) == rings::eval_at_j(a) * rings::eval_at_j(b));
        CHECK(rings::eval_at_j(a + b) == rings::eval_at_j(a) + rings::eval_at_j(b));
    }
}

TEST_CASE("series arithmetic narrows to the minimum order") {
    const RatSeries a = random_series(8);
    const RatSeries b = random_series(5);
    CHECK((a * b).order() == 5);
    CHECK((a + b).order() == 5);
    CHECK_THROWS_AS(RatSeries(0, {}), std::invalid_argument);
}

TEST_CASE("series division: geometric series and self-division") {
    // 1/(1-z) = 1 + z + z^2 + ...
    const RatSeries one = RatSeries::one(6);
    const RatSeries den(6, {Rat(1), Rat(-1)});
    const RatSeries geom = rings::series_div(one, den);
    for (std::size_t i = 0; i < 6; ++i) CHECK(geom.coeff(i) == 1);

    const RatSeries p = random_series(7, true);
    CHECK(rings::series_div(p, p) == RatSeries::one(7));

    CHECK_THROWS_AS(rings::series_div(one, RatSeries(6, {Rat(0), Rat(1)})),
                    std::invalid_argument);
}

TEST_CASE("series division undoes multiplication within truncation") {
    for (int i = 0; i < 200; ++i) {
        const RatSeries a = random_series(6);
        const RatSeries b = random_series(6, true);
        CHECK(rings::series_div(a * b, b) == a);
    }
}

TEST_CASE("series ring axioms on random triples") {
    for (int i = 0; i < 200; ++i) {
        const RatSeries a = random_series(5), b = random_series(5),
                        c = random_series(5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * RatSeries::one(5) == a);
    }
}
