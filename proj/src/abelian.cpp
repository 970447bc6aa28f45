#include "swcalc/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace swcalc::rings {

AbelianGroupDesc AbelianGroupDesc::cyclic(long order) {
    if (order < 2) throw std::invalid_argument("cyclic order must be >= 2");
    return {0, {order}, Knowledge::Complete};
}

AbelianGroupDesc AbelianGroupDesc::direct_sum(const AbelianGroupDesc& other) const {
    AbelianGroupDesc r;
    r.rank = rank + other.rank;
    r.torsion = torsion;
    r.torsion.insert(r.torsion.end(), other.torsion.begin(), other.torsion.end());
    std::sort(r.torsion.begin(), r.torsion.end());
    r.knowledge = (knowledge == Knowledge::Complete &&
                   other.knowledge == Knowledge::Complete)
                      ? Knowledge::Complete
                      : Knowledge::PartialBeyondTable;
    return r;
}

std::string AbelianGroupDesc::str() const {
    std::string out;
    if (rank == 1)
        out = "Z";
    else if (rank > 1)
        out = "Z^" + std::to_string(rank);
    for (long t : torsion) {
        if (!out.empty()) out += " ⊕ ";
        out += "Z/" + std::to_string(t);
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace swcalc::rings
