#ifndef SWCALC_MANIFOLDS_HPP
#define SWCALC_MANIFOLDS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace swcalc::manifolds {

enum class Flag {
    Spin,
    Symplectic,
    Minimal,
    Kahler,
    SimplyConnected,
    // Weakening of "symplectic" accepted by the vanishing rules: every
    // spin^c structure with non-trivial refined invariant is almost complex.
    AllNonzeroClassesAlmostComplex,
};

// Spin^c structure on a fixed 4-manifold, described numerically: the square
// of its first Chern class, evaluations of c1 on named embedded -2-spheres,
// and whether c1 is trivial (vanishing canonical class).
struct SpinCStructure {
    long long c1_squared = 0;
    bool c1_trivial = false;
    std::map<std::string, long long> c1_evaluations;

    bool operator==(const SpinCStructure&) const = default;
};

// Closed oriented connected 4-manifold descriptor.  sign, b2 and e are
// derived, never stored.  validate() enforces:
//   - Spin  =>  sign ≡ 0 mod 16 (index of the Dirac operator is a
//     multiple of the quaternions)
//   - SimplyConnected  =>  b1 = 0
//   - every spin^c entry has c1^2 ≡ sign mod 8 (integral Dirac index)
//   - c1_trivial entries have c1^2 = 0
struct FourManifold {
    std::string name;
    long long b1 = 0;
    long long b_plus = 0;
    long long b_minus = 0;
    std::set<Flag> flags;
    std::vector<SpinCStructure> spinc_list;

    // Name of a designated embedded -2-sphere, when the manifold carries
    // one; enables sums along -2-curves.
    std::optional<std::string> minus2_sphere;

    // When set: every spin^c structure with nonvanishing refined invariant
    // evaluates c1 on the designated sphere to this residue mod 4.
    std::optional<int> uniform_c1_eval_mod4;

    // The first Chern classes of nonvanishing classes span a positive
    // semi-definite subspace of H^2(X;Q).
    bool nonvanishing_span_semidefinite = false;

    long long sign() const { return b_plus - b_minus; }
    long long b2() const { return b_plus + b_minus; }
    long long euler() const { return 2 - 2 * b1 + b2(); }
    bool has(Flag f) const { return flags.count(f) != 0; }

    void validate() const;  // throws MathConstraintError

    bool operator==(const FourManifold&) const = default;
};

// d = (c1^2 - sign)/8, the complex index of the spin^c Dirac operator.
long long dirac_index(const FourManifold& m, const SpinCStructure& s);

// k = (c1^2 - sign)/4 - (b⁺ - b1 + 1), the expected dimension of the
// monopole moduli space; equals 2*dirac_index - b⁺ + b1 - 1.
long long virtual_dimension(const FourManifold& m, const SpinCStructure& s);

// Whether the stably almost complex structure is honestly almost complex:
// c1^2 = 3 sign + 2 e.
bool almost_complex_admissible(const FourManifold& m, const SpinCStructure& s);

enum class VerdictKind { Vanishes, Nonvanishing, Unknown };

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::string rule;  // citation of the theorem that fired
    // Marks a Vanishes that certifies the descriptor itself is impossible
    // (failed K-orientation bound, Morgan-Szabo obstruction) rather than a
    // legitimate vanishing class.
    bool inconsistency = false;
};

// For b⁺ = 0: any K-orientation satisfies c1^2 <= sign, so a descriptor
// violating it is inconsistent.  Consistent descriptors give Unknown.
Verdict bplus_zero_constraint(const FourManifold& m, const SpinCStructure& s);

// Symplectic, b1 = 0, trivial canonical class forces sign = -16
// (such a manifold is homeomorphic to a K3 surface).
Verdict morgan_szabo_check(const FourManifold& m);

// Equivariant invariants of a free prime-order quotient reduce mod p to the
// invariants of the quotients: sw_total ≡ Σ sw_quotients mod p.
bool galois_congruence_check(long long sw_total,
                             const std::vector<long long>& sw_quotients,
                             long long p);

// Connected sum at descriptor level: Betti numbers add, spin^c structures
// pair with c1^2 adding.  Spin and SimplyConnected survive exactly when
// both summands have them; Symplectic/Kahler/Minimal never survive.
FourManifold connected_sum(const FourManifold& a, const FourManifold& b);

// Sum along the designated -2-spheres: sign gains 2, e loses 4, b1 adds;
// spin^c structures pair when their c1 evaluations on the designated
// spheres are 2 and 0 mod 4 (in either order), with
// c1^2 = c1^2(a) + c1^2(b) + 2.
FourManifold sum_along_minus2(const FourManifold& a, const FourManifold& b);

// What is known about a factor's monopole class.
enum class StatusKind {
    Unit,             // monopole map homotopic to the identity (S^4, N)
    AlmostComplexSW,  // almost complex structure with integer SW = sw
    KnownNonzero,     // some spin^c structure has nonvanishing class
    KnownZero,        // every spin^c structure has vanishing class
    Unknown,
};

struct FactorStatus {
    StatusKind kind = StatusKind::Unknown;
    long long sw = 0;  // only for AlmostComplexSW

    bool operator==(const FactorStatus&) const = default;
};

struct Factor {
    FourManifold manifold;
    std::optional<SpinCStructure> spinc;
    FactorStatus status;

    bool operator==(const Factor&) const = default;
};

enum class SumKind { Connected, AlongMinus2 };

// Monopole class of a sum of 4-manifolds, as the smash product of the
// classes of its factors.  AlongMinus2 descriptors have exactly two factors.
struct MonopoleClassDescriptor {
    SumKind kind = SumKind::Connected;
    std::vector<Factor> factors;

    static MonopoleClassDescriptor single(Factor f);

    bool operator==(const MonopoleClassDescriptor&) const = default;
};

// Smash product of connected-sum descriptors: concatenates factor lists and
// drops Unit factors (their class is the identity).
MonopoleClassDescriptor smash(const MonopoleClassDescriptor& a,
                              const MonopoleClassDescriptor& b);

// Applies the encoded vanishing and non-vanishing theorems in a fixed
// order and returns the first that fires, with its citation.  Missing data
// yields Unknown, never a guess.  Throws RuleConflictError when both a
// vanishing and a non-vanishing rule fire, which certifies the input
// descriptor was inconsistent.
Verdict classify(const MonopoleClassDescriptor& d);

}  // namespace swcalc::manifolds

#endif
