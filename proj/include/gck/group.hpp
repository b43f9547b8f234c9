#pragma once

#include <memory>
#include <vector>

#include "gck/perm.hpp"

namespace gck {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

constexpr long kDefaultOrderCap = 10080;

/*
 * A finite permutation group, fully enumerated.
 *
 * Elements are stored sorted lexicographically by image sequence; that order
 * is the canonical element order used by every "canonical representative"
 * contract in the library. The identity is always element 0. Intended scale
 * is |G| <= ~10^4, which keeps double cosets, class maps and transversals
 * trivial; there is deliberately no Schreier-Sims machinery here.
 */
class Group {
public:
    int degree() const { return degree_; }
    long order() const { return static_cast<long>(elems_.size()); }
    const std::vector<Perm>& elements() const { return elems_; }
    const Perm& perm(int i) const { return elems_[i]; }
    const std::vector<int>& generator_indices() const { return gen_idx_; }

    // Index of p in the canonical order; throws GroupMismatch if absent.
    int index_of(const Perm& p) const;
    bool contains(const Perm& p) const;

    int mul(int a, int b) const; // index of elems_[a] * elems_[b]
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); } // g x g^-1
    int element_order(int a) const;
    long exponent() const; // lcm of element orders

    // BFS expression of each element as gens[link[e].first] * elems_[link[e].second];
    // the identity has link {-1, -1}. Lets callers fold an action of generators
    // into an action of arbitrary elements without a full action table.
    const std::vector<std::pair<int, int>>& bfs_link() const { return link_; }

    // Conjugacy classes, ordered by canonical (minimal) representative; the
    // identity's class comes first. class_of_[e] is the class index of e.
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int e) const { return class_of_[e]; }
    int class_representative(int c) const { return classes_[c][0]; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int inverse_class(int c) const { return class_of_[inv_[classes_[c][0]]]; }

    // FNV-1a digest of (degree, sorted element images); cache key for tables.
    std::string canonical_hash() const;

    friend GroupPtr group_from_generators(int degree, const std::vector<Perm>& gens,
                                          long order_cap);

private:
    Group() = default;
    int degree_ = 0;
    std::vector<Perm> elems_;
    std::vector<int> gen_idx_;
    std::vector<int> inv_;
    std::vector<std::pair<int, int>> link_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

// Closure of gens under composition. Throws InvalidPermutation for bad input
// (wrong degree counts as invalid) and OrderCapExceeded past the cap.
GroupPtr group_from_generators(int degree, const std::vector<Perm>& gens,
                               long order_cap = kDefaultOrderCap);

/*
 * A subgroup is a subset of a parent group's elements, closed under the
 * parent's multiplication. It keeps its parent alive via shared ownership.
 */
class Subgroup {
public:
    Subgroup() = default;
    // Validates closure of the given element indices; throws NotASubgroup.
    // validate=false skips the O(|H|^2) closure check for element sets that
    // are closed by construction (BFS closures).
    Subgroup(GroupPtr parent, std::vector<int> element_indices,
             std::vector<int> generator_indices, bool validate = true);

    const GroupPtr& parent() const { return parent_; }
    long order() const { return static_cast<long>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    const std::vector<int>& generators() const { return gens_; }
    bool contains(int elem_index) const;
    bool is_cyclic() const;

    bool same_parent(const Subgroup& rhs) const { return parent_ == rhs.parent_; }
    bool operator==(const Subgroup& rhs) const {
        return parent_ == rhs.parent_ && elems_ == rhs.elems_;
    }

private:
    GroupPtr parent_;
    std::vector<int> elems_; // sorted indices into parent
    std::vector<int> gens_;  // indices into parent
};

// Closure of the given parent elements inside the parent group.
Subgroup subgroup_generated(const GroupPtr& G, const std::vector<int>& gen_indices);
Subgroup subgroup_generated(const GroupPtr& G, const std::vector<Perm>& gens);
Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup full_subgroup(const GroupPtr& G);
Subgroup conjugate_subgroup(const Subgroup& H, int g); // g H g^-1

// Minimal sorted element-index vector over all conjugates of H; canonical key
// for the conjugacy class of a subgroup.
std::vector<int> subgroup_class_key(const Subgroup& H);

// Representatives hitting every left coset gH exactly once, in canonical
// order (each representative minimal in its coset; the identity first).
std::vector<int> left_transversal(const GroupPtr& G, const Subgroup& H);

struct DoubleCoset {
    int representative = 0;     // minimal element in canonical order
    std::vector<int> elements;  // sorted
    Subgroup left;
    Subgroup right;
};

// Partition of G into H\G/H2 double cosets, ordered by representative.
std::vector<DoubleCoset> double_cosets(const GroupPtr& G, const Subgroup& H,
                                       const Subgroup& H2);

// One representative per conjugacy class of subgroups, sorted by order then
// canonical class key. Enumeration is by iterated extension of cyclic
// subgroups with dedup on element sets; adequate below order ~100.
std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& G);

} // namespace gck
