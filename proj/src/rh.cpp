#include "gck/rh.hpp"

#include "gck/errors.hpp"

namespace gck {

void validate_cover(const CoverData& c) {
    if (c.component_stabilizer.parent() != c.group)
        throw NotASubgroup("component stabilizer belongs to a different group");
    if (c.base_genus < 0) throw InconsistentBranchData("negative base genus");
    for (const Subgroup& s : c.branch_stabilizers) {
        if (s.parent() != c.group)
            throw NotASubgroup("branch stabilizer belongs to a different group");
        for (int e : s.elements())
            if (!c.component_stabilizer.contains(e))
                throw NotASubgroup("branch stabilizer is not contained in H");
        if (!s.is_cyclic())
            throw NonCyclicStabilizer(
                "branch stabilizers are cyclic in characteristic zero; got a non-cyclic one");
    }
}

VirtualCharacter equivariant_rh(const CoverData& c, const CharacterTablePtr& table) {
    validate_cover(c);
    const GroupPtr& G = c.group;
    Subgroup e = trivial_subgroup(G);

    ClassFunction chi =
        induce_trivial(c.component_stabilizer, G).scaled(2) +
        induce_trivial(e, G).scaled(2 * c.base_genus - 2);
    for (const Subgroup& s : c.branch_stabilizers)
        chi = chi + (induce_trivial(e, G) - induce_trivial(s, G));
    return decompose(chi, table);
}

VirtualCharacter equivariant_rh(const CoverData& c) {
    return equivariant_rh(c, character_table(c.group));
}

long component_genus(const CoverData& c) {
    validate_cover(c);
    const long h = c.component_stabilizer.order();
    long rhs = h * (2 * c.base_genus - 2);
    for (const Subgroup& s : c.branch_stabilizers) rhs += h - h / s.order();
    if (rhs % 2 != 0)
        throw InconsistentBranchData("2g - 2 = " + std::to_string(rhs) + " is odd");
    long genus = (rhs + 2) / 2;
    if (genus < 0)
        throw InconsistentBranchData("2g - 2 = " + std::to_string(rhs) +
                                     " has no non-negative genus solution");
    return genus;
}

bool rh_consistency(const CoverData& c, const CharacterTablePtr& table) {
    VirtualCharacter v = equivariant_rh(c, table);
    long genus = component_genus(c);
    long index = c.group->order() / c.component_stabilizer.order();
    return v.degree() == Int(2 * index * genus) && v.is_effective();
}

} // namespace gck
