#include "swcalc/cohomotopy.hpp"

#include <stdexcept>

#include "swcalc/james.hpp"

namespace swcalc::cohomotopy {

using rings::AbelianGroupDesc;
using rings::Knowledge;

AbelianGroupDesc stable_stem(long n) {
    if (n < 0 || n > 5)
        throw std::invalid_argument("stable stem table covers 0 <= n <= 5");
    switch (n) {
        case 0: return AbelianGroupDesc::free_part(1);
        case 1:
        case 2: return AbelianGroupDesc::cyclic(2);
        case 3: return AbelianGroupDesc::cyclic(24);
        default: return AbelianGroupDesc::trivial();  // n = 4, 5
    }
}

AbelianGroupDesc torsion_part_A(long k, long d) {
    if (k < 0 || k > 4)
        throw std::invalid_argument(
            "A(k,d) table covers 0 <= k <= 4; use p_primary_vanishes beyond");
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    switch (k) {
        case 0:
        case 4: return AbelianGroupDesc::trivial();
        case 1:
        case 2:
            return d % 2 == 0 ? AbelianGroupDesc::cyclic(2)
                              : AbelianGroupDesc::trivial();
        default: {
            // 2-primary order by d mod 8; 0 stands for the trivial group.
            static constexpr long two_part[8] = {8, 0, 2, 4, 4, 0, 2, 2};
            AbelianGroupDesc g = AbelianGroupDesc::trivial();
            if (long o = two_part[d % 8]; o != 0)
                g = g.direct_sum(AbelianGroupDesc::cyclic(o));
            if (d % 3 == 0) g = g.direct_sum(AbelianGroupDesc::cyclic(3));
            return g;
        }
    }
}

bool p_primary_vanishes(long k, long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    return k < 2 * p - 3;
}

long p_vanishing_threshold(long k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    long p = 2;
    while (!(k < 2 * p - 3)) {
        ++p;
        while (!is_prime(p)) ++p;
    }
    return p;
}

AbelianGroupDesc invariant_group(long k, long d) {
    if (k < 0) return AbelianGroupDesc::trivial();
    AbelianGroupDesc rank_part =
        k % 2 == 0 ? AbelianGroupDesc::free_part(1) : AbelianGroupDesc::trivial();
    if (k <= 4) return rank_part.direct_sum(torsion_part_A(k, d));
    rank_part.knowledge = Knowledge::PartialBeyondTable;
    return rank_part;
}

AbelianGroupDesc invariant_group(const InvariantTarget& t) {
    return invariant_group(t.k(), t.d);
}

Int hurewicz_divisibility(long m, long n) {
    return james::james_lower_bound(m, n);
}

}  // namespace swcalc::cohomotopy
