#ifndef SWCALC_DESCRIPTOR_IO_HPP
#define SWCALC_DESCRIPTOR_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swcalc/abelian.hpp"
#include "swcalc/manifolds.hpp"

namespace swcalc::io {

// A manifold entry bundles the descriptor with what is known about its
// monopole classes when it appears as a factor of a sum expression.
struct ManifoldEntry {
    manifolds::FourManifold manifold;
    manifolds::FactorStatus status;

    bool operator==(const ManifoldEntry&) const = default;
};

// Sum expression over named manifolds (or previously defined expressions):
// an n-ary connected sum or a binary sum along designated -2-spheres.
struct Expression {
    std::string name;
    manifolds::SumKind sum = manifolds::SumKind::Connected;
    std::vector<std::string> factors;

    bool operator==(const Expression&) const = default;
};

struct DescriptorFile {
    std::string format_version;
    std::vector<ManifoldEntry> manifolds;
    std::vector<Expression> expressions;

    const ManifoldEntry* find_manifold(const std::string& name) const;
    const Expression* find_expression(const std::string& name) const;

    bool operator==(const DescriptorFile&) const = default;
};

inline constexpr const char* kFormatVersion = "1.0";

// Parses and fully validates a descriptor file.  Schema violations and
// unknown references throw std::invalid_argument (or nlohmann's parse
// errors); mathematically impossible descriptors throw MathConstraintError.
// Validation includes the b+ = 0 K-orientation bound and the Morgan-Szabo
// obstruction where their hypotheses apply.
DescriptorFile parse_descriptor_file(const std::string& text);
DescriptorFile load_descriptor_file(const std::string& path);

// Canonical JSON emission; parse(emit(f)) == f.
std::string emit_descriptor_file(const DescriptorFile& f);

// Result of evaluating a sum expression: the combined manifold descriptor
// and the monopole-class descriptor fed to the rule engine.
struct EvaluatedExpression {
    manifolds::FourManifold manifold;
    manifolds::MonopoleClassDescriptor monopole_class;
};

EvaluatedExpression evaluate_expression(const DescriptorFile& f,
                                        const std::string& name);

// Bundled descriptor library: the compiled-in data directory, overridable
// with the SWCALC_DATA_DIR environment variable.
std::string bundled_descriptor_path();

// JSON round-trip for group descriptors.
std::string emit_group(const rings::AbelianGroupDesc& g);
rings::AbelianGroupDesc parse_group(const std::string& text);

// Stable 64-bit FNV-1a digest used for report provenance.
std::uint64_t fnv1a(std::string_view data);
std::string fnv1a_hex(std::string_view data);

}  // namespace swcalc::io

#endif
