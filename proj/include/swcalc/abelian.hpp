#ifndef SWCALC_ABELIAN_HPP
#define SWCALC_ABELIAN_HPP

#include <string>
#include <vector>

namespace swcalc::rings {

// Finitely generated abelian group as (rank, orders of cyclic torsion
// summands, knowledge flag).  Torsion orders are >= 2 and sorted
// non-decreasing.  Two Complete descriptors are equal iff rank and torsion
// lists are equal; Partial descriptors only certify the fields they carry
// (the torsion list of a Partial descriptor is not exhaustive).
enum class Knowledge { Complete, PartialBeyondTable };

struct AbelianGroupDesc {
    long rank = 0;
    std::vector<long> torsion;
    Knowledge knowledge = Knowledge::Complete;

    static AbelianGroupDesc trivial() { return {}; }
    static AbelianGroupDesc free_part(long rank) { return {rank, {}, Knowledge::Complete}; }
    static AbelianGroupDesc cyclic(long order);

    bool is_trivial() const { return rank == 0 && torsion.empty(); }

    // Direct sum; Complete only when both summands are Complete.
    AbelianGroupDesc direct_sum(const AbelianGroupDesc& other) const;

    bool operator==(const AbelianGroupDesc& rhs) const = default;

    std::string str() const;  // "0", "Z", "Z/24", "Z ⊕ Z/2", "Z/2 ⊕ Z/3"
};

}  // namespace swcalc::rings

#endif
