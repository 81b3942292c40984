#pragma once

#include <string>
#include <vector>

#include "modisom/group.hpp"

namespace modisom {

enum class FamilyTag { cyclic, elementary, dihedral, semidihedral, quaternion, extraspecial, mip_G, mip_H };

// A built-in group family plus parameters. order is the full group order
// for the one-parameter families; the mip pair uses n > m > 2 (p = 2 forced);
// extraspecial groups of order p^3 (p odd) pick their exponent (p or p^2).
struct FamilySpec {
    FamilyTag tag = FamilyTag::cyclic;
    uint32_t p = 2;
    uint64_t order = 0;
    uint32_t n = 0;
    uint32_t m = 0;
    uint64_t exponent = 0;

    static FamilySpec cyclic_group(uint32_t p, uint64_t order);
    static FamilySpec elementary_group(uint32_t p, uint64_t order);
    static FamilySpec dihedral_group(uint64_t order);
    static FamilySpec semidihedral_group(uint64_t order);
    static FamilySpec quaternion_group(uint64_t order);
    static FamilySpec extraspecial_group(uint32_t p, uint64_t exponent);
    static FamilySpec mip_pair_G(uint32_t n, uint32_t m);
    static FamilySpec mip_pair_H(uint32_t n, uint32_t m);

    std::string name() const;
};

FamilyTag family_tag_from_string(const std::string& s);

// Refined power-commutator presentation (every relative order = p).
// Throws on invalid parameters.
PcPresentation family_presentation(const FamilySpec& spec);

GroupPtr build_family(const FamilySpec& spec);

// The standard test corpus: every built-in 2-group family member of order
// <= 64, plus C_3, C_9 and the two extraspecial groups of order 27.
std::vector<FamilySpec> acceptance_corpus();

} // namespace modisom
