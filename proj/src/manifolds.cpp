#include "swcalc/manifolds.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "swcalc/errors.hpp"
#include "swcalc/numeric.hpp"

namespace swcalc::manifolds {

namespace {

long long mod4(long long v) { return ((v % 4) + 4) % 4; }
long long mod8(long long v) { return ((v % 8) + 8) % 8; }

}  // namespace

void FourManifold::validate() const {
    auto fail = [&](const std::string& msg) {
        throw MathConstraintError("manifold '" + name + "': " + msg);
    };
    if (b1 < 0 || b_plus < 0 || b_minus < 0) fail("negative Betti number");
    if (has(Flag::SimplyConnected) && b1 != 0)
        fail("simply connected but b1 != 0");
    if (has(Flag::Spin) && ((sign() % 16) + 16) % 16 != 0)
        fail("spin but signature not divisible by 16");
    if (minus2_sphere && b_minus < 1)
        fail("a -2-sphere needs b- >= 1");
    if (uniform_c1_eval_mod4 &&
        (*uniform_c1_eval_mod4 < 0 || *uniform_c1_eval_mod4 > 3))
        fail("uniform c1 evaluation must be a residue mod 4");
    for (const SpinCStructure& s : spinc_list) {
        if (mod8(s.c1_squared - sign()) != 0)
            fail("spin^c with c1^2 = " + std::to_string(s.c1_squared) +
                 " incongruent to sign = " + std::to_string(sign()) +
                 " mod 8 (Dirac index not integral)");
        if (s.c1_trivial && s.c1_squared != 0)
            fail("trivial c1 with nonzero c1^2");
        for (const auto& [curve, value] : s.c1_evaluations)
            if (value % 2 != 0)
                fail("c1 evaluation on -2-sphere '" + curve +
                     "' must be even (c1 is characteristic)");
    }
}

long long dirac_index(const FourManifold& m, const SpinCStructure& s) {
    const long long num = s.c1_squared - m.sign();
    if (mod8(num) != 0)
        throw MathConstraintError("manifold '" + m.name +
                                  "': Dirac index not integral (c1^2 - sign = " +
                                  std::to_string(num) + ")");
    return num / 8;
}

long long virtual_dimension(const FourManifold& m, const SpinCStructure& s) {
    const long long d2 = s.c1_squared - m.sign();
    if (mod8(d2) != 0)
        throw MathConstraintError("manifold '" + m.name +
                                  "': Dirac index not integral");
    return d2 / 4 - (m.b_plus - m.b1 + 1);
}

bool almost_complex_admissible(const FourManifold& m, const SpinCStructure& s) {
    return s.c1_squared == 3 * m.sign() + 2 * m.euler();
}

Verdict bplus_zero_constraint(const FourManifold& m, const SpinCStructure& s) {
    if (m.b_plus != 0)
        throw std::invalid_argument("bplus_zero_constraint requires b+ = 0");
    if (s.c1_squared > m.sign())
        return {VerdictKind::Vanishes,
                "K-orientation bound for b+ = 0 violated (c1^2 > sign): no "
                "such K-orientation exists",
                true};
    return {VerdictKind::Unknown, "K-orientation bound for b+ = 0: consistent",
            false};
}

Verdict morgan_szabo_check(const FourManifold& m) {
    const bool hypotheses =
        m.has(Flag::Symplectic) && m.b1 == 0 &&
        std::any_of(m.spinc_list.begin(), m.spinc_list.end(),
                    [](const SpinCStructure& s) {
                        return s.c1_squared == 0 && s.c1_trivial;
                    });
    if (!hypotheses)
        throw std::invalid_argument(
            "morgan_szabo_check requires a symplectic manifold with b1 = 0 "
            "and a spin^c structure with trivial c1");
    if (m.sign() != -16)
        return {VerdictKind::Vanishes,
                "Morgan-Szabo theorem (symplectic, b1 = 0, c1 = 0 forces "
                "sign = -16): no such manifold exists",
                true};
    return {VerdictKind::Unknown,
            "Morgan-Szabo theorem: consistent (homeomorphic to a K3 surface)",
            false};
}

bool galois_congruence_check(long long sw_total,
                             const std::vector<long long>& sw_quotients,
                             long long p) {
    if (!is_prime(static_cast<long>(p)))
        throw std::invalid_argument("modulus must be prime");
    long long sum = 0;
    for (long long q : sw_quotients) sum += q;
    return (((sw_total - sum) % p) + p) % p == 0;
}

FourManifold connected_sum(const FourManifold& a, const FourManifold& b) {
    FourManifold r;
    r.name = a.name + "#" + b.name;
    r.b1 = a.b1 + b.b1;
    r.b_plus = a.b_plus + b.b_plus;
    r.b_minus = a.b_minus + b.b_minus;
    if (a.has(Flag::Spin) && b.has(Flag::Spin)) r.flags.insert(Flag::Spin);
    if (a.has(Flag::SimplyConnected) && b.has(Flag::SimplyConnected))
        r.flags.insert(Flag::SimplyConnected);
    if (r.euler() != a.euler() + b.euler() - 2)
        throw std::logic_error("Euler characteristic bookkeeping failed");
    for (const SpinCStructure& sa : a.spinc_list)
        for (const SpinCStructure& sb : b.spinc_list) {
            SpinCStructure s;
            s.c1_squared = sa.c1_squared + sb.c1_squared;
            s.c1_trivial = sa.c1_trivial && sb.c1_trivial;
            s.c1_evaluations = sa.c1_evaluations;
            for (const auto& [curve, value] : sb.c1_evaluations)
                if (!s.c1_evaluations.emplace(curve, value).second)
                    throw MathConstraintError("duplicate -2-sphere name '" +
                                              curve + "' in connected sum");
            r.spinc_list.push_back(std::move(s));
        }
    r.minus2_sphere = a.minus2_sphere ? a.minus2_sphere : b.minus2_sphere;
    r.validate();
    return r;
}

FourManifold sum_along_minus2(const FourManifold& a, const FourManifold& b) {
    if (!a.minus2_sphere || !b.minus2_sphere)
        throw MathConstraintError(
            "sum along -2-spheres needs a designated sphere on both factors");
    FourManifold r;
    r.name = a.name + "#2" + b.name;
    r.b1 = a.b1 + b.b1;
    // Novikov additivity with the two sphere neighbourhoods removed:
    // signatures gain 2, Euler characteristics lose 4; b± follow.
    const long long sign = a.sign() + b.sign() + 2;
    const long long e = a.euler() + b.euler() - 4;
    const long long b2 = e - 2 + 2 * r.b1;
    if ((b2 + sign) % 2 != 0 || b2 + sign < 0 || b2 - sign < 0)
        throw MathConstraintError("sum along -2-spheres yields no valid "
                                  "descriptor (b2 = " + std::to_string(b2) +
                                  ", sign = " + std::to_string(sign) + ")");
    r.b_plus = (b2 + sign) / 2;
    r.b_minus = (b2 - sign) / 2;

    for (const SpinCStructure& sa : a.spinc_list) {
        auto ea = sa.c1_evaluations.find(*a.minus2_sphere);
        if (ea == sa.c1_evaluations.end()) continue;
        for (const SpinCStructure& sb : b.spinc_list) {
            auto eb = sb.c1_evaluations.find(*b.minus2_sphere);
            if (eb == sb.c1_evaluations.end()) continue;
            // The glued structure exists when one side evaluates 2 and the
            // other 0 modulo 4.
            const long long ra = mod4(ea->second), rb = mod4(eb->second);
            if (!((ra == 2 && rb == 0) || (ra == 0 && rb == 2))) continue;
            SpinCStructure s;
            s.c1_squared = sa.c1_squared + sb.c1_squared + 2;
            for (const auto& [curve, value] : sa.c1_evaluations)
                if (curve != *a.minus2_sphere) s.c1_evaluations[curve] = value;
            for (const auto& [curve, value] : sb.c1_evaluations)
                if (curve != *b.minus2_sphere)
                    if (!s.c1_evaluations.emplace(curve, value).second)
                        throw MathConstraintError("duplicate -2-sphere name '" +
                                                  curve + "' in -2-sum");
            r.spinc_list.push_back(std::move(s));
        }
    }
    r.validate();
    return r;
}

MonopoleClassDescriptor MonopoleClassDescriptor::single(Factor f) {
    MonopoleClassDescriptor d;
    d.factors.push_back(std::move(f));
    return d;
}

MonopoleClassDescriptor smash(const MonopoleClassDescriptor& a,
                              const MonopoleClassDescriptor& b) {
    if (a.kind != SumKind::Connected || b.kind != SumKind::Connected)
        throw std::invalid_argument(
            "smash concatenation applies to connected-sum descriptors");
    MonopoleClassDescriptor r;
    for (const auto* src : {&a, &b})
        for (const Factor& f : src->factors)
            if (f.status.kind != StatusKind::Unit) r.factors.push_back(f);
    return r;
}

namespace {

bool symplectic_like(const FourManifold& m) {
    return m.has(Flag::Symplectic) ||
           m.has(Flag::AllNonzeroClassesAlmostComplex);
}

// Factor whose monopole class is known to be nonzero: declared so, a unit,
// or almost complex with nonzero SW and b+ > 1 (where the comparison with
// the integer invariant is an isomorphism).
bool known_nonvanishing(const Factor& f) {
    switch (f.status.kind) {
        case StatusKind::KnownNonzero:
        case StatusKind::Unit: return true;
        case StatusKind::AlmostComplexSW:
            return f.status.sw != 0 && f.manifold.b_plus > 1;
        default: return false;
    }
}

// Hypothesis shared by the non-vanishing items 2 and 3: an almost complex
// structure with odd SW, b+ = 3 mod 4, vanishing first Betti number.
bool odd_sw_b3_factor(const Factor& f) {
    return f.status.kind == StatusKind::AlmostComplexSW &&
           f.status.sw % 2 != 0 && mod4(f.manifold.b_plus) == 3 &&
           f.manifold.b1 == 0;
}

const char* RULE_V1_CONN =
    "vanishing theorem for connected sums, item 1 (a summand with vanishing "
    "refined invariants)";
const char* RULE_V2_CONN =
    "vanishing theorem for connected sums, item 2 (two or more symplectic "
    "b1 = 0 summands, one symplectic summand with b+ = 1 mod 4)";
const char* RULE_V3_CONN =
    "vanishing theorem for connected sums, item 3 (four symplectic summands, "
    "b1 = 0, b+ not 4 mod 8)";
const char* RULE_V4_CONN =
    "vanishing theorem for connected sums, item 4 (five symplectic b1 = 0 "
    "summands)";
const char* RULE_V1_M2 =
    "vanishing theorem for -2-sphere sums, item 1 (a factor with vanishing "
    "refined invariants)";
const char* RULE_V2_M2 =
    "vanishing theorem for -2-sphere sums, item 2 (all nonvanishing classes "
    "of both factors evaluate to the same residue mod 4)";
const char* RULE_V3_M2 =
    "vanishing theorem for -2-sphere sums, item 3 (nonvanishing classes span "
    "positive semi-definite subspaces)";
const char* RULE_V4_M2 =
    "vanishing theorem for -2-sphere sums, item 4 (two minimal Kahler "
    "factors with b+ > 1)";
const char* RULE_N1 =
    "non-vanishing theorem for connected sums, item 1 (a nonvanishing "
    "summand and a summand with b+ = 0)";
const char* RULE_N2 =
    "non-vanishing theorem for connected sums, item 2 (two or three almost "
    "complex summands with odd SW and b+ = 3 mod 4)";
const char* RULE_N3 =
    "non-vanishing theorem for connected sums, item 3 (four almost complex "
    "summands with odd SW, b+ = 3 mod 4, total b+ = 4 mod 8)";
const char* RULE_N0 =
    "comparison isomorphism for almost complex manifolds with b+ > 1 "
    "(nonzero SW lifts to the refinement)";
const char* RULE_UNIT =
    "unit monopole class (the monopole map is homotopic to the identity on "
    "the sphere spectrum)";

}  // namespace

Verdict classify(const MonopoleClassDescriptor& d) {
    const auto& fs = d.factors;
    const bool minus2 = d.kind == SumKind::AlongMinus2;
    if (minus2 && fs.size() != 2)
        throw std::invalid_argument(
            "a -2-sphere sum descriptor has exactly two factors");

    std::optional<std::string> vanishing;
    std::optional<std::string> nonvanishing;
    auto fire_v = [&](const char* rule) {
        if (!vanishing) vanishing = rule;
    };
    auto fire_n = [&](const char* rule) {
        if (!nonvanishing) nonvanishing = rule;
    };

    // --- vanishing rules, in theorem order ---
    for (const Factor& f : fs)
        if (f.status.kind == StatusKind::KnownZero)
            fire_v(minus2 ? RULE_V1_M2 : RULE_V1_CONN);

    if (!minus2) {
        const long sympl_b1_zero = static_cast<long>(std::count_if(
            fs.begin(), fs.end(), [](const Factor& f) {
                return symplectic_like(f.manifold) && f.manifold.b1 == 0;
            }));
        const bool witness_b1mod4 = std::any_of(
            fs.begin(), fs.end(), [](const Factor& f) {
                return symplectic_like(f.manifold) &&
                       mod4(f.manifold.b_plus) == 1;
            });
        if (sympl_b1_zero >= 2 && witness_b1mod4) fire_v(RULE_V2_CONN);

        const bool all_symplectic = std::all_of(
            fs.begin(), fs.end(),
            [](const Factor& f) { return symplectic_like(f.manifold); });
        long long total_b1 = 0, total_bplus = 0;
        for (const Factor& f : fs) {
            total_b1 += f.manifold.b1;
            total_bplus += f.manifold.b_plus;
        }
        if (fs.size() == 4 && all_symplectic && total_b1 == 0 &&
            mod8(total_bplus) != 4)
            fire_v(RULE_V3_CONN);
        // Five such summands form a vanishing sub-sum, which item 1 then
        // absorbs into any larger sum.
        if (sympl_b1_zero >= 5) fire_v(RULE_V4_CONN);
    } else {
        const FourManifold& x0 = fs[0].manifold;
        const FourManifold& x1 = fs[1].manifold;
        if (x0.uniform_c1_eval_mod4 && x1.uniform_c1_eval_mod4 &&
            *x0.uniform_c1_eval_mod4 == *x1.uniform_c1_eval_mod4)
            fire_v(RULE_V2_M2);
        if (x0.nonvanishing_span_semidefinite &&
            x1.nonvanishing_span_semidefinite)
            fire_v(RULE_V3_M2);
        auto minimal_kahler = [](const FourManifold& m) {
            return m.has(Flag::Minimal) && m.has(Flag::Kahler) && m.b_plus > 1;
        };
        if (minimal_kahler(x0) && minimal_kahler(x1)) fire_v(RULE_V4_M2);
    }

    // --- non-vanishing rules (connected sums only) ---
    if (!minus2) {
        const bool all_units = std::all_of(
            fs.begin(), fs.end(), [](const Factor& f) {
                return f.status.kind == StatusKind::Unit;
            });
        if (all_units) fire_n(RULE_UNIT);  // includes the empty smash product

        if (fs.size() == 2) {
            if ((known_nonvanishing(fs[0]) && fs[1].manifold.b_plus == 0) ||
                (known_nonvanishing(fs[1]) && fs[0].manifold.b_plus == 0))
                fire_n(RULE_N1);
        }
        const bool all_odd_b3 =
            std::all_of(fs.begin(), fs.end(), odd_sw_b3_factor);
        if ((fs.size() == 2 || fs.size() == 3) && all_odd_b3) fire_n(RULE_N2);
        if (fs.size() == 4 && all_odd_b3) {
            long long total_bplus = 0;
            for (const Factor& f : fs) total_bplus += f.manifold.b_plus;
            if (mod8(total_bplus) == 4) fire_n(RULE_N3);
        }
        if (fs.size() == 1 && fs[0].status.kind == StatusKind::AlmostComplexSW &&
            fs[0].status.sw != 0 && fs[0].manifold.b_plus > 1)
            fire_n(RULE_N0);
    }

    if (vanishing && nonvanishing)
        throw RuleConflictError(*vanishing, *nonvanishing);
    if (vanishing) return {VerdictKind::Vanishes, *vanishing, false};
    if (nonvanishing) return {VerdictKind::Nonvanishing, *nonvanishing, false};
    return {VerdictKind::Unknown, "no encoded theorem applies", false};
}

}  // namespace swcalc::manifolds
