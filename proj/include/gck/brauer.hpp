#pragma once

#include <vector>

#include "gck/classfun.hpp"
#include "gck/gset.hpp"

namespace gck {

// A pair of non-isomorphic G-sets with equal permutation characters, given by
// their stabilizer multisets (conjugacy-class representatives, sorted).
struct BrauerRelation {
    std::vector<Subgroup> left_stabilizers;
    std::vector<Subgroup> right_stabilizers;
    ClassFunction character; // the shared permutation character
};

/*
 * Exhaustive search over multisets of at most max_blocks subgroup conjugacy
 * classes. Candidate pairs are matched on integer fixed-point vectors first,
 * then confirmed by character equality and G-set non-isomorphism. Pairs
 * sharing a common class are dropped (cancelling the common block leaves a
 * smaller relation that the search already reports), so every reported pair
 * has disjoint stabilizer multisets.
 */
std::vector<BrauerRelation> brauer_relations(const GroupPtr& G, int max_blocks,
                                             long order_cap = kDefaultOrderCap);

} // namespace gck
