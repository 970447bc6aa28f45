#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "swcalc/errors.hpp"
#include "swcalc/ktheory.hpp"

using namespace swcalc;
using ktheory::Pin2Rep;
using ktheory::TRep;
using rings::LaurentPoly;
using rings::PinElem;
using testsupport::rand_int;

namespace {

// Euler-class oracle: alternating sum of exterior-power characters, with
// the Λ^i computed as elementary symmetric polynomials of the monomials
// z^{w_j} by the standard recurrence.
LaurentPoly euler_oracle(const TRep& v) {
    std::vector<LaurentPoly> elementary(v.dim() + 1);
    elementary[0] = LaurentPoly(Int(1));
    std::size_t used = 0;
    for (long w : v.weights) {
        ++used;
        for (std::size_t i = used; i >= 1; --i)
            elementary[i] = elementary[i] + elementary[i - 1] * LaurentPoly::z(w);
    }
    LaurentPoly alt;
    for (std::size_t i = 0; i <= v.dim(); ++i) {
        const LaurentPoly term = elementary[i];
        alt = (i % 2 == 0) ? alt + term : alt - term;
    }
    return alt;
}

LaurentPoly one_minus_z() { return LaurentPoly(Int(1)) - LaurentPoly::z(); }

}  // namespace

TEST_CASE("Euler classes in R(T)") {
    CHECK(euler_class(TRep({1})) == one_minus_z());
    CHECK(euler_class(TRep{}) == LaurentPoly(Int(1)));

    // (1-z)^3 = 1 - 3z + 3z^2 - z^3, frozen from the exterior-power oracle.
    const LaurentPoly cube = euler_class(TRep({1, 1, 1}));
    CHECK(cube == euler_oracle(TRep({1, 1, 1})));
    CHECK(cube == LaurentPoly(Int(1)) - LaurentPoly::monomial(Int(3), 1) +
                      LaurentPoly::monomial(Int(3), 2) - LaurentPoly::z(3));

    // a trivial line has vanishing Euler class
    CHECK(euler_class(TRep({0})) == LaurentPoly{});

    for (int i = 0; i < 100; ++i) {
        std::vector<long> w;
        const long n = rand_int(0, 5);
        for (long j = 0; j < n; ++j) w.push_back(rand_int(-4, 4));
        const TRep r{w};
        CHECK(euler_class(r) == euler_oracle(r));
    }
}

TEST_CASE("Euler class is multiplicative over direct sums") {
    for (int i = 0; i < 200; ++i) {
        std::vector<long> w1, w2;
        for (long j = rand_int(0, 4); j > 0; --j) w1.push_back(rand_int(-4, 4));
        for (long j = rand_int(0, 4); j > 0; --j) w2.push_back(rand_int(-4, 4));
        const TRep a{w1}, b{w2};
        CHECK(euler_class(a.direct_sum(b)) == euler_class(a) * euler_class(b));
    }
}

TEST_CASE("Euler classes in R(Pin(2))") {
    CHECK(euler_class(Pin2Rep{0, 0, 1}) == PinElem(Int(2)) - PinElem::h());
    CHECK(euler_class(Pin2Rep{0, 1, 0}) ==
          PinElem(Int(1)) - PinElem::lambda());
    CHECK(euler_class(Pin2Rep{1, 2, 3}) == PinElem{});

    // restriction to T: (2-h)^k restricts to (2 - z - z^-1)^k = (-z^-1)^k (1-z)^{2k}
    for (long k = 0; k <= 32; ++k) {
        const PinElem e = euler_class(Pin2Rep{0, 0, k});
        const LaurentPoly expected =
            LaurentPoly::monomial(Int(k % 2 == 0 ? 1 : -1), -k) *
            one_minus_z().pow(static_cast<unsigned long>(2 * k));
        CHECK(rings::restrict_to_torus(e) == expected);
    }
}

TEST_CASE("fixed-point degree relation") {
    // matching source and target cancel the Euler classes
    auto a = ktheory::k_degree(Int(5), TRep::standard(2), TRep::standard(2));
    REQUIRE(a.has_value());
    CHECK(*a == LaurentPoly(Int(5)));

    // C^m -> C^{m+l} forces d(1-z)^l
    for (long m = 1; m <= 6; ++m)
        for (long l = 0; l <= 4; ++l) {
            auto r = ktheory::k_degree(Int(3), TRep::standard(m),
                                       TRep::standard(m + l));
            REQUIRE(r.has_value());
            CHECK(*r == LaurentPoly(Int(3)) *
                            one_minus_z().pow(static_cast<unsigned long>(l)));
            // re-multiplication: a(z) e(source) = d e(target)
            CHECK(*r * euler_class(TRep::standard(m)) ==
                  LaurentPoly(Int(3)) * euler_class(TRep::standard(m + l)));
        }

    // shrinking the fiber dimension is impossible for nonzero fixed degree
    CHECK_FALSE(ktheory::k_degree(Int(1), TRep::standard(2), TRep::standard(1)));

    CHECK_THROWS_AS(ktheory::k_degree(Int(1), TRep({0, 1}), TRep({1})),
                    std::invalid_argument);
}

TEST_CASE("degree verdict for equivariant extensions") {
    using ktheory::DegreeVerdict;
    CHECK(ktheory::degree1_verdict(3, 2, -1, Int(1)).kind ==
          DegreeVerdict::Kind::Impossible);
    const auto forced = ktheory::degree1_verdict(3, 2, 0, Int(7));
    CHECK(forced.kind == DegreeVerdict::Kind::DegreeForced);
    CHECK(forced.degree == 7);
    CHECK(ktheory::degree1_verdict(0, 1, 2, Int(1)).kind ==
          DegreeVerdict::Kind::NoConstraint);
    CHECK_THROWS_AS(ktheory::degree1_verdict(1, 1, 0, Int(0)),
                    std::invalid_argument);
}

TEST_CASE("character equation solution and threshold") {
    // sign = -16: dH = 2, threshold b+ = 3
    auto a = ktheory::furuta_solve(-16, 3);
    REQUIRE(a.has_value());
    CHECK(*a == 1);
    CHECK_FALSE(ktheory::furuta_solve(-16, 2).has_value());

    auto a5 = ktheory::furuta_solve(-32, 5);
    REQUIRE(a5.has_value());
    CHECK(*a5 == 1);

    // closed form 2^{b+ - 1 - dH} wherever a solution exists
    for (long sign = -16; sign >= -256; sign -= 16) {
        const long dH = -sign / 8;
        for (long b = 0; b <= dH + 8; ++b) {
            const auto r = ktheory::furuta_solve(sign, b);
            if (b - 1 >= dH) {
                REQUIRE(r.has_value());
                Int expect = 1;
                for (long i = 0; i < b - 1 - dH; ++i) expect *= 2;
                CHECK(*r == expect);
            } else {
                CHECK_FALSE(r.has_value());
            }
        }
        // sharpness at the threshold b+ = 1 - sign/8
        CHECK(ktheory::furuta_solve(sign, 1 - sign / 8).has_value());
        CHECK_FALSE(ktheory::furuta_solve(sign, -sign / 8).has_value());
    }

    CHECK_THROWS_AS(ktheory::furuta_solve(-10, 3), MathConstraintError);
    CHECK_THROWS_AS(ktheory::furuta_solve(16, 3), MathConstraintError);
    CHECK_THROWS_AS(ktheory::furuta_solve(0, 3), MathConstraintError);
}

TEST_CASE("derivation exposes both sides in normal form") {
    const auto d = ktheory::furuta_derivation(-16, 3);
    CHECK(d.d_h == 2);
    // (1-λ)^4 = 8 - 8λ
    CHECK(d.lhs == PinElem(Int(8)) - PinElem(Int(8)) * PinElem::lambda());
    // 2 (2-h)^2 (1-λ) = 8 - 8λ
    CHECK(d.rhs_base == PinElem(Int(8)) - PinElem(Int(8)) * PinElem::lambda());
    REQUIRE(d.a.has_value());
    CHECK(*d.a == 1);
}

TEST_CASE("Betti bounds from the character equation") {
    CHECK(ktheory::furuta_bound(-16) == 22);  // K3 attains it with b2 = 22
    CHECK(ktheory::furuta_bound(-32) == 42);
    CHECK(ktheory::furuta_bound(-112) == 142);

    // bound equals the smallest b2 = 2b+ - sign over solvable b+
    for (long sign = -16; sign >= -256; sign -= 16) {
        long b = 0;
        while (!ktheory::furuta_solve(sign, b).has_value()) ++b;
        CHECK(2 * b - sign == ktheory::furuta_bound(sign));
    }

    CHECK_THROWS_AS(ktheory::furuta_bound(-24), MathConstraintError);
}

TEST_CASE("refined Betti bounds") {
    CHECK(ktheory::refined_furuta_bound(-32) == 44);
    CHECK(ktheory::refined_furuta_bound(-48) == 66);
    CHECK(ktheory::refined_furuta_bound(-64) == 88);
    CHECK(ktheory::refined_furuta_bound(-112) == 146);  // |sign| = 48 mod 64
    CHECK(ktheory::refined_furuta_bound(-96) == 124);   // sign = 32 mod 64

    // agreement with the basic bound away from the refined congruences
    for (long sign = -16; sign >= -512; sign -= 16) {
        const long s64 = ((sign % 64) + 64) % 64;
        const long abs64 = (-sign) % 64;
        if (s64 != 32 && abs64 != 48 && sign != -64)
            CHECK(ktheory::refined_furuta_bound(sign) ==
                  ktheory::furuta_bound(sign));
    }
}

TEST_CASE("lowest rank still open for the 11/8 conjecture") {
    CHECK(ktheory::eleven_eighths_open_b2 == 104);
    CHECK(ktheory::refined_furuta_bound(-80) <= ktheory::eleven_eighths_open_b2);
}
