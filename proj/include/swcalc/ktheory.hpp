#ifndef SWCALC_KTHEORY_HPP
#define SWCALC_KTHEORY_HPP

#include <optional>
#include <vector>

#include "swcalc/laurent.hpp"
#include "swcalc/numeric.hpp"
#include "swcalc/pin_ring.hpp"

namespace swcalc::ktheory {

// Complex T-representation as a multiset of integer weights: the direct sum
// of lines C_w on which z in T acts as z^w.  Weights are kept sorted.
struct TRep {
    std::vector<long> weights;

    TRep() = default;
    explicit TRep(std::vector<long> w);

    std::size_t dim() const { return weights.size(); }
    static TRep standard(std::size_t copies);  // C^copies, all weights 1

    TRep direct_sum(const TRep& other) const;

    bool operator==(const TRep& rhs) const = default;
};

// Pin(2)-representation assembled from trivial lines, copies of the sign
// character lambda, and copies of the quaternions H (complex dimension 2).
struct Pin2Rep {
    long trivial_count = 0;
    long lambda_count = 0;
    long h_count = 0;

    long complex_dim() const { return trivial_count + lambda_count + 2 * h_count; }
};

// K-theoretic Euler class in R(T): the alternating sum of exterior powers,
// which for a sum of lines is the product of (1 - z^w).  A zero weight
// contributes the factor 0.
rings::LaurentPoly euler_class(const TRep& v);

// Euler class in R(Pin(2)): (1-λ)^{lambda_count} (2-h)^{h_count}; any
// trivial summand kills it.
rings::PinElem euler_class(const Pin2Rep& v);

// Fixed-point degree relation: solves e(target) * fixed_degree =
// a(z) * e(source) for the K_T-degree character a(z).  Returns nullopt when
// no integral character exists, certifying that no T-equivariant map with
// the given fixed-point degree can exist.  Source and target must contain
// no zero weights (strip fixed parts first).
std::optional<rings::LaurentPoly> k_degree(const Int& fixed_degree,
                                           const TRep& source,
                                           const TRep& target);

// Conclusion for an equivariant map S^{2n} ∧ S^{C^m} -> S^{2n} ∧ S^{C^{m+l}}
// of fixed-point degree d != 0: impossible for l < 0, total degree forced to
// d when l = 0, no constraint otherwise.
struct DegreeVerdict {
    enum class Kind { Impossible, DegreeForced, NoConstraint };
    Kind kind = Kind::NoConstraint;
    Int degree = 0;  // meaningful only for DegreeForced

    bool operator==(const DegreeVerdict&) const = default;
};

DegreeVerdict degree1_verdict(long n, long m, long l, const Int& d);

// Character-equation reduction for a spin 4-manifold of signature `sign`:
// the identity (1/2)(1-λ)^{b⁺+1} = a (2-h)^{dH} (1-λ), cleared of the 1/2,
// with both sides reduced to normal form.  dH = -sign/8 is the quaternionic
// dimension of the doubled Dirac index.  `a` is solved by coefficient
// matching and is absent when no integer solution exists.  Requires
// sign < 0 and sign ≡ 0 mod 16.
struct FurutaDerivation {
    long d_h = 0;
    rings::PinElem lhs;       // (1-λ)^{b⁺+1}, reduced
    rings::PinElem rhs_base;  // 2 (2-h)^{dH} (1-λ), reduced; multiplies a
    std::optional<Int> a;
};

FurutaDerivation furuta_derivation(long sign, long b_plus);

// The multiplier a, or nullopt when the character equation has no integer
// solution.  Computed through the symbolic reduction, not a closed form.
std::optional<Int> furuta_solve(long sign, long b_plus);

// Minimal second Betti number of a spin 4-manifold with the given negative
// signature: 2 - (10/8) sign, exactly.
long furuta_bound(long sign);

// Sharpened bound 2a - (10/8) sign with a = 2 for sign ≡ 32 mod 64,
// a = 3 for |sign| ≡ 48 mod 64, a = 1 otherwise; the case sign = -64
// is special with bound 88.
long refined_furuta_bound(long sign);

// Smallest second Betti number at which a counterexample to the 11/8
// conjecture remains possible: an equivariant map with the invariants of a
// spin manifold with sign = -80, b2 = 104 exists, so character bounds
// cannot rule it out.
inline constexpr long eleven_eighths_open_b2 = 104;

}  // namespace swcalc::ktheory

#endif
