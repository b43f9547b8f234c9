#pragma once

#include <memory>
#include <vector>

#include "gck/gset.hpp"
#include "gck/matrix.hpp"
#include "gck/numeric.hpp"

namespace gck {

class RealizedModule;

using GSetPtr = std::shared_ptr<const GSet>;

/*
 * A G-module homomorphism phi: Z[S] -> Z[S'] between permutation modules,
 * stored column-convention: rows are indexed by codomain points, columns by
 * domain points, and column x holds the image of basis vector x expanded in
 * the codomain basis. Equivariance P'(g) M = M P(g) holds for every
 * generator g (validated on construction).
 */
struct PermModuleHom {
    GSetPtr domain;
    GSetPtr codomain;
    Matrix<Int> matrix;
};

// The point act(elem, base(block)) of s.
int point_of(const GSet& s, int elem_index, int block);

// One basis hom phi_{HgH'} per double coset of H\G/H2, in canonical double
// coset order; phi_{HgH'}(H) = sum of the cosets contained in HgH'.
std::vector<PermModuleHom> hom_basis(const GroupPtr& G, const Subgroup& H,
                                     const Subgroup& H2);

// Validates shape and equivariance; the NotEquivariant message carries a
// witness generator and domain point.
PermModuleHom hom_from_matrix(const GSetPtr& s, const GSetPtr& s2, Matrix<Int> matrix);

// Build from the images of each block's base point (full codomain-coordinate
// columns), extended equivariantly along each block, then validated.
PermModuleHom hom_from_images(const GSetPtr& s, const GSetPtr& s2,
                              const std::vector<Matrix<Int>>& base_images);

// A basis vector described as element * base(block): used to pin an explicit
// basis ordering that differs from the canonical coset order.
struct BasisVector {
    int element = 0; // group element index
    int block = 0;
};

// The matrix of phi with respect to explicit orderings of domain and codomain
// basis vectors. Each ordering must enumerate every point exactly once.
Matrix<Int> matrix_with_ordering(const PermModuleHom& phi,
                                 const std::vector<BasisVector>& domain_order,
                                 const std::vector<BasisVector>& codomain_order);

// Transpose with domain and codomain swapped (the elements of S form an
// orthonormal basis of Z[S], so dual = transpose).
PermModuleHom dual_hom(const PermModuleHom& phi);

// Composite phi2 after phi; ShapeMismatch unless codomain(phi) = domain(phi2).
PermModuleHom compose(const PermModuleHom& phi2, const PermModuleHom& phi);

// The map phi^*: direct sum of M^{H'_j} -> direct sum of M^{H_i} obtained by
// precomposition with phi under Hom_G(Z[G/H], M) = M^H, written in the
// invariant bases that invariants_basis(M, -) produces.
Matrix<Cyclotomic> induced_map_on_invariants(const PermModuleHom& phi,
                                             const RealizedModule& m);

} // namespace gck
