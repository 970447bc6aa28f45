#ifndef SWCALC_COHOMOTOPY_HPP
#define SWCALC_COHOMOTOPY_HPP

#include "swcalc/abelian.hpp"
#include "swcalc/numeric.hpp"

namespace swcalc::cohomotopy {

// Target group data for a 4-manifold with b1 = 0 and b⁺ > 1: the invariant
// lives in π^{b⁺-1}(P(C^d)) where d is the complex Dirac index and
// k = 2d - b⁺ - 1 is the virtual dimension.  k is always recomputed.
struct InvariantTarget {
    long b_plus = 0;
    long d = 0;

    long k() const { return 2 * d - b_plus - 1; }
};

// Stable stems π^st_n(S^0) for 0 <= n <= 5: Z, Z/2, Z/2, Z/24, 0, 0.
rings::AbelianGroupDesc stable_stem(long n);

// Torsion summand A(k,d) of π^{b⁺-1}(P(C^d)) for 0 <= k <= 4:
//   A(0,d) = A(4,d) = 0;
//   A(1,d) = A(2,d) = Z/2 for even d, 0 otherwise;
//   A(3,d) = 2-primary cyclic of order 8,0,2,4,4,0,2,2 by d mod 8
//            (0 meaning the trivial group), plus Z/3 exactly when 3 | d.
rings::AbelianGroupDesc torsion_part_A(long k, long d);

// Whether the p-primary part of A(k,d) is certified zero: true iff
// k < 2p - 3.  False means "not certified", not "nonzero".
bool p_primary_vanishes(long k, long p);

// Smallest prime p such that p-primary vanishing is certified at this k;
// all primes >= the threshold vanish as well.
long p_vanishing_threshold(long k);

// Full invariant target group: trivial for k < 0; Z ⊕ A(k,d) for even
// k >= 0 and A(k,d) for odd k, exact through k <= 4.  Beyond the table the
// rank is still exact but the torsion is only partially known
// (PartialBeyondTable), with p-primary vanishing certified for k < 2p - 3.
rings::AbelianGroupDesc invariant_group(long k, long d);
rings::AbelianGroupDesc invariant_group(const InvariantTarget& t);

// Divisibility constraint on Seiberg-Witten integers coming from the index
// of the cohomotopy Hurewicz map: the K-theory lower bound for the stable
// James number of (m, n).
Int hurewicz_divisibility(long m, long n);

}  // namespace swcalc::cohomotopy

#endif
