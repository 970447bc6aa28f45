#ifndef SWCALC_NUMERIC_HPP
#define SWCALC_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace swcalc {

using Int = mpz_class;
using Rat = mpq_class;

// Rational in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Least non-negative residue, correct for negative a.
inline long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline std::string str(const Int& z) { return z.get_str(); }

inline std::string str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace swcalc

#endif
