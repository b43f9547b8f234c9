#pragma once

#include <memory>
#include <vector>

#include "gck/cyclotomic.hpp"
#include "gck/group.hpp"

namespace gck {

// A conjugation-invariant function on a group, one exact cyclotomic value per
// conjugacy class (classes in the group's canonical class order).
struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclotomic> values;

    const Cyclotomic& degree() const { return values[0]; } // value at the identity

    ClassFunction operator+(const ClassFunction& rhs) const;
    ClassFunction operator-(const ClassFunction& rhs) const;
    ClassFunction operator*(const ClassFunction& rhs) const; // pointwise
    ClassFunction scaled(const Int& n) const;
    ClassFunction conjugate() const;
    bool operator==(const ClassFunction& rhs) const;
    bool is_integer_valued() const;
};

ClassFunction trivial_character(const GroupPtr& G);

class CharacterTable;
using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

/*
 * The irreducible complex characters of a finite group, exact.
 *
 * Computed with the Burnside-Dixon method: simultaneous eigenvectors of the
 * class-multiplication matrices over a prime field F_p with p = 1 (mod exp G)
 * and p > 2*sqrt(|G|), lifted to cyclotomic values through eigenvalue
 * multiplicities of each element's action. No floating point anywhere.
 *
 * Irreducibles are ordered by (degree, trivial first, lexicographic values);
 * the trivial character is always index 0.
 */
class CharacterTable {
public:
    const GroupPtr& group() const { return group_; }
    int size() const { return static_cast<int>(irreducibles_.size()); }
    const ClassFunction& irreducible(int i) const { return irreducibles_[i]; }
    const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
    int trivial_index() const { return 0; }

    // Index of the complex-conjugate irreducible (closure under duality).
    int conjugate_index(int i) const;

    // Degree of irreducible i as a plain integer.
    Int degree(int i) const { return irreducibles_[i].degree().integer_value(); }

    // Assemble a table from externally supplied irreducibles (cache loads).
    // Validates the count, orthonormality of each row, and the ordering.
    static CharacterTablePtr from_irreducibles(const GroupPtr& G,
                                               std::vector<ClassFunction> irreducibles);

    friend CharacterTablePtr character_table(const GroupPtr& G, long order_cap);

private:
    CharacterTable() = default;
    GroupPtr group_;
    std::vector<ClassFunction> irreducibles_;
};

CharacterTablePtr character_table(const GroupPtr& G, long order_cap = kDefaultOrderCap);

// (1/|G|) sum_g chi(g) conj(psi(g)), exact; classwise. Throws GroupMismatch.
Cyclotomic inner_product_cyclotomic(const ClassFunction& chi, const ClassFunction& psi);
// Same, demanding a rational result (always the case for characters).
Rat inner_product(const ClassFunction& chi, const ClassFunction& psi);

// Character of the permutation representation on G/H (fixed-coset counts).
ClassFunction induce_trivial(const Subgroup& H, const GroupPtr& G);

// An integer combination of irreducibles; negative multiplicities allowed.
struct VirtualCharacter {
    CharacterTablePtr table;
    std::vector<Int> multiplicities;

    Int degree() const;
    bool is_effective() const; // all multiplicities >= 0
    ClassFunction class_function() const;

    VirtualCharacter operator+(const VirtualCharacter& rhs) const;
    VirtualCharacter operator-(const VirtualCharacter& rhs) const;
    VirtualCharacter scaled(const Int& n) const;
    bool operator==(const VirtualCharacter& rhs) const;
};

// Inner products against every irreducible; throws NotVirtualCharacter if any
// multiplicity fails to be an integer.
VirtualCharacter decompose(const ClassFunction& chi, const CharacterTablePtr& table);

} // namespace gck
