#pragma once

#include <vector>

#include "gck/classfun.hpp"
#include "gck/cyclotomic.hpp"
#include "gck/group.hpp"
#include "gck/matrix.hpp"

namespace gck {

/*
 * A concrete G-module over cyclotomic scalars: one action matrix per group
 * element (built from the generator matrices along the group's BFS chains).
 * Construction validates multiplicativity on every (generator, element) pair
 * and, when a character is declared, that traces match it.
 */
class RealizedModule {
public:
    RealizedModule(GroupPtr group, int dimension,
                   std::vector<Matrix<Cyclotomic>> generator_matrices,
                   const ClassFunction* declared_character = nullptr);

    const GroupPtr& group() const { return group_; }
    int dimension() const { return dim_; }
    const Matrix<Cyclotomic>& action(int elem_index) const { return action_[elem_index]; }
    ClassFunction character() const;

private:
    GroupPtr group_;
    int dim_ = 0;
    std::vector<Matrix<Cyclotomic>> action_; // one per element
};

constexpr long kDefaultRealizedCap = 120;

// Left translation on the group algebra; character (|G|, 0, ..., 0).
RealizedModule regular_module(const GroupPtr& G, long order_cap = kDefaultRealizedCap);

// Image of the central idempotent e_rho = (dim rho / |G|) sum_g conj(chi(g)) g.
// Character of the result is <chi_M, rho> * rho. Throws NotIrreducible.
RealizedModule isotypic_component(const RealizedModule& m, const ClassFunction& rho);

// Columns form a basis of M^H (image of the averaging operator over H).
Matrix<Cyclotomic> invariants_basis(const RealizedModule& m, const Subgroup& H);

} // namespace gck
