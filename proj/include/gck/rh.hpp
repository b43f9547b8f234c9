#pragma once

#include <vector>

#include "gck/classfun.hpp"
#include "gck/group.hpp"

namespace gck {

/*
 * Branch data of one connected component of a G-cover of a genus-g(Y) base:
 * the component stabilizer H, and the (cyclic) stabilizers in H of one chosen
 * preimage per branch point. The choice of preimage only changes each
 * stabilizer by conjugacy, which induced trivial characters cannot see.
 */
struct CoverData {
    GroupPtr group;
    Subgroup component_stabilizer;
    long base_genus = 0;
    std::vector<Subgroup> branch_stabilizers;
};

// Throws NotASubgroup / NonCyclicStabilizer / InconsistentBranchData on bad data.
void validate_cover(const CoverData& c);

// 2 Ind_H^G 1 + (2g(Y)-2) Ind_e^G 1 + sum_i (Ind_e^G 1 - Ind_{S_i}^G 1),
// the character of V_ell(Jac) of the cover, as a virtual character.
VirtualCharacter equivariant_rh(const CoverData& c, const CharacterTablePtr& table);
VirtualCharacter equivariant_rh(const CoverData& c);

// Genus of the component from ordinary Riemann-Hurwitz:
// 2g - 2 = |H| (2 g(Y) - 2) + sum_i (|H| - |H| / |S_i|).
// InconsistentBranchData when no non-negative integral genus solves it.
long component_genus(const CoverData& c);

// Degree identity deg = 2 [G:H] g(component) plus effectivity of the virtual
// character.
bool rh_consistency(const CoverData& c, const CharacterTablePtr& table);

} // namespace gck
