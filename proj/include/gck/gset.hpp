#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gck/classfun.hpp"
#include "gck/group.hpp"

namespace gck {

constexpr int kDefaultClosurePointCap = 7; // n! grows fast; 7! = 5040 points

struct GSetBlock {
    Subgroup stabilizer; // exact stabilizer of base_point
    int base_point = 0;
    std::vector<int> points; // the orbit, ascending
};

// A commuting right action recorded on closure outputs; quotients consume it.
struct GSetRightAction {
    GroupPtr group;                              // the right-acting group
    std::vector<std::vector<int>> gen_action;    // per generator of `group`
};

/*
 * A finite left G-set: indexed points, an action given per group generator
 * (arbitrary elements act by folding the group's BFS chains), and the orbit
 * decomposition with exact base-point stabilizers.
 *
 * Action convention: left actions everywhere, act(h, act(g, x)) = act(h*g, x)
 * with the library's composition (g acts first). A dedicated test pins this.
 */
class GSet {
public:
    GroupPtr group;
    std::vector<std::vector<int>> gen_action; // [generator][point]
    std::vector<GSetBlock> blocks;
    std::vector<int> block_of;    // point -> block index
    std::vector<int> transporter; // point p = transporter[p] * base(block)
    std::vector<std::string> labels;
    std::optional<GSetRightAction> right;

    int size() const { return static_cast<int>(block_of.size()); }
    int act(int elem_index, int point) const;
    int act_right(int elem_index, int point) const; // throws NoRightAction
    Perm image_of(int elem_index) const;            // elem as permutation of points
    bool is_transitive() const { return blocks.size() == 1; }
};

// Disjoint union of coset spaces G/H_i, points in canonical coset order
// (cosets sorted by minimal representative), blocks in the given order.
GSet gset_from_stabilizers(const GroupPtr& G, const std::vector<Subgroup>& stabs);

// Number of points fixed by a representative of each class.
ClassFunction permutation_character(const GSet& s);

// True iff the multisets of block stabilizers agree up to conjugacy.
bool isomorphic_gsets(const GSet& s, const GSet& t);

// The G-set of bijections [n] -> points(S) under (sigma.phi)(m) = sigma(phi(m)),
// with the commuting right S_n-action by precomposition recorded.
GSet sn_closure(const GSet& s, int point_cap = kDefaultClosurePointCap);

// Orbits of the recorded right action restricted to B; the left action
// descends. B must be a subgroup of the recorded right-acting group.
GSet quotient_by_right_subgroup(const GSet& s, const Subgroup& b);

// The subgroup 1 x S_{n-1} of the right-acting S_n (stabiliser of 0 in [n]).
Subgroup right_point_stabilizer(const GSet& closure);

enum class DiscriminantReport { split, nonsplit };

// Two-point quotient of Bij([n], S) by the right A_n action; split iff the
// acting group lands in the alternating group of Sym(S).
DiscriminantReport alternating_quotient(const GSet& s,
                                        int point_cap = kDefaultClosurePointCap);

// Points are the elements of C (a transitive subgroup of Sym(points(S))
// containing the image of the acting group), with the acting group composing
// on the left and the commuting right C-action recorded.
GSet g_closure(const GSet& s, const GroupPtr& C);

std::string discriminant_report_name(DiscriminantReport r);

} // namespace gck
