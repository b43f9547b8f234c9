#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gck/classfun.hpp"
#include "gck/permmod.hpp"
#include "gck/realized.hpp"

namespace gck {

/*
 * The symbolic homomorphism f_phi attached to phi: Z[S] -> Z[S'], one block
 * per (target i, source j) pair:
 *
 *   f_phi[i][j] = prefactor * (pi_{H_i})_* o [ sum_t m_t t_* ] o (pi_{H'_j})^*
 *
 * As emitted, the group-algebra element of each block is a union of double
 * cosets scaled by the double-coset coordinates of phi (so it is H_i-left and
 * H'_j-right invariant), with prefactor 1/(|H_i| |H'_j|). simplify() collapses
 * each double coset onto its canonical representative and absorbs
 * (pi_H)_* o (pi_H)^* = |H| into an identity term where it applies.
 */
struct ExpressionBlock {
    Subgroup target_stabilizer; // H_i
    Subgroup source_stabilizer; // H'_j
    Rat prefactor = Rat(1);
    std::map<int, Int> terms;   // group element index -> integer coefficient
    Rat identity_coefficient = Rat(0); // multiple of the identity map (H_i == H'_j only)
    bool simplified = false;
};

struct IsogenyExpression {
    GroupPtr group;
    int target_blocks = 0;
    int source_blocks = 0;
    std::vector<ExpressionBlock> blocks; // row-major: [i * source_blocks + j]

    const ExpressionBlock& block(int i, int j) const { return blocks[i * source_blocks + j]; }
    ExpressionBlock& block(int i, int j) { return blocks[i * source_blocks + j]; }
    bool operator==(const IsogenyExpression& rhs) const;
    std::string str() const; // pretty form mirroring pi_*, pi^* notation
};

// Expand each component of phi in the double-coset basis and emit the
// group-algebra sums. NotInBasisSpan signals a non-constant coefficient on a
// double coset, which cannot happen for a validated equivariant phi.
IsogenyExpression f_phi_expression(const PermModuleHom& phi);

// Collapse double cosets to canonical representatives, absorb stabilizer
// factors into the prefactor, extract identity terms, and renormalise so the
// term coefficients are coprime integers. Idempotent.
IsogenyExpression simplify_expression(const IsogenyExpression& e);

// Transpose block structure, invert every group element, and swap the roles
// of pushforward and pullback. Satisfies
// dual_expression(f_phi_expression(phi)) == f_phi_expression(dual_hom(phi))
// after simplification.
IsogenyExpression dual_expression(const IsogenyExpression& e);

struct IsogenyWitness {
    int irreducible = 0; // index into the character table
    int rows = 0, cols = 0, rank = 0; // per single copy of the irreducible
};

struct IsogenyVerdict {
    bool certified = false;
    std::optional<IsogenyWitness> witness; // set when not certified
    // Block shapes per tested irreducible (single-copy counts), for reports.
    std::vector<IsogenyWitness> tested_blocks;
};

/*
 * Theorem-4.7(3)-style criterion: for every irreducible rho with positive
 * multiplicity in V, the induced block map on rho-isotypic invariants must be
 * a bijection. The blocks are evaluated on the rho-isotypic component of the
 * regular module (character-equivalent to any realization of V) and reported
 * per single copy of rho; multiplicity only tensors the block with an
 * identity, so invertibility is unaffected.
 */
IsogenyVerdict isogeny_criterion(const PermModuleHom& phi, const VirtualCharacter& v);

} // namespace gck
