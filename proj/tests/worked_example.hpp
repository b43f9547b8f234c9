#pragma once

// The S3 worked-example fixture shared by unit tests and the acceptance
// suite: phi: Z[S3/<h>]x1 + Z[S3/<h>]x2 + Z[S3/<g>]x3 -> Z[S3]y determined by
// x1 -> (1+h)y, x2 -> (g+hg)y, x3 -> (1+g+g^2)y, with g = (0 1 2), h = (0 1).
//
// Bases are pinned to {x1, gx1, g^2x1, x2, gx2, g^2x2, x3, hx3} and
// {y, gy, g^2y, hy, ghy, g^2hy}.
//
// With the presentation hg = g^2h, expanding the generator images
// equivariantly forces the matrix below (each column of the x2 block is the
// double-coset sum <h>g placed at the translated base point). The matrix as
// printed in the source text differs in the (hy, ghy, g^2hy) x (x2 block)
// entries; that variant fails h-equivariance, since hg lies in the basis
// position of g^2h, not gh. The erratum variant is kept here so tests can
// assert it is rejected.

#include <vector>

#include "gck/gset.hpp"
#include "gck/matrix.hpp"
#include "gck/permmod.hpp"

namespace worked {

struct Example {
    gck::GroupPtr G;
    gck::Subgroup H;  // <h> = <(0 1)>
    gck::Subgroup C3; // <g> = <(0 1 2)>
    gck::GSetPtr domain;
    gck::GSetPtr codomain;
    gck::PermModuleHom phi;
    std::vector<gck::BasisVector> domain_order;
    std::vector<gck::BasisVector> codomain_order;
};

inline gck::Matrix<gck::Int> matrix_from_rows(const std::vector<std::vector<long>>& rows) {
    gck::Matrix<gck::Int> m(static_cast<int>(rows.size()),
                            static_cast<int>(rows.empty() ? 0 : rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = gck::Int(rows[r][c]);
    return m;
}

// The matrix of phi over the pinned bases, derived by expanding the
// generator images with hg = g^2h and verified equivariant.
inline gck::Matrix<gck::Int> expected_matrix() {
    return matrix_from_rows({
        {1, 0, 0, 0, 0, 1, 1, 0},
        {0, 1, 0, 1, 0, 0, 1, 0},
        {0, 0, 1, 0, 1, 0, 1, 0},
        {1, 0, 0, 0, 1, 0, 0, 1},
        {0, 1, 0, 0, 0, 1, 0, 1},
        {0, 0, 1, 1, 0, 0, 0, 1},
    });
}

// The erratum variant as printed in the source text: the x2-block entries of
// the h-rows are cyclically shifted. Not h-equivariant.
inline gck::Matrix<gck::Int> printed_matrix_variant() {
    return matrix_from_rows({
        {1, 0, 0, 0, 0, 1, 1, 0},
        {0, 1, 0, 1, 0, 0, 1, 0},
        {0, 0, 1, 0, 1, 0, 1, 0},
        {1, 0, 0, 0, 0, 1, 0, 1},
        {0, 1, 0, 1, 0, 0, 0, 1},
        {0, 0, 1, 0, 1, 0, 0, 1},
    });
}

inline Example make() {
    using namespace gck;
    Example ex;
    ex.G = group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
    ex.H = subgroup_generated(ex.G, {Perm::parse("(0 1)", 3)});
    ex.C3 = subgroup_generated(ex.G, {Perm::parse("(0 1 2)", 3)});
    ex.domain = std::make_shared<const GSet>(gset_from_stabilizers(ex.G, {ex.H, ex.H, ex.C3}));
    ex.codomain =
        std::make_shared<const GSet>(gset_from_stabilizers(ex.G, {trivial_subgroup(ex.G)}));

    auto idx = [&](const char* s) { return ex.G->index_of(Perm::parse(s, 3)); };
    const int e = 0;
    const int g = idx("(0 1 2)");
    const int g2 = idx("(0 2 1)");
    const int h = idx("(0 1)");
    const int gh = ex.G->mul(g, h);
    const int g2h = ex.G->mul(g2, h);
    const int hg = ex.G->mul(h, g); // = g^2 h

    // Images of the block base points as codomain coordinate columns.
    auto column = [&](const std::vector<int>& elems) {
        Matrix<Int> col(ex.codomain->size(), 1);
        for (int u : elems) col.at(point_of(*ex.codomain, u, 0), 0) += 1;
        return col;
    };
    ex.phi = hom_from_images(ex.domain, ex.codomain,
                             {column({e, h}), column({g, hg}), column({e, g, g2})});

    ex.domain_order = {{e, 0}, {g, 0}, {g2, 0}, {e, 1}, {g, 1}, {g2, 1}, {e, 2}, {h, 2}};
    ex.codomain_order = {{e, 0}, {g, 0}, {g2, 0}, {h, 0}, {gh, 0}, {g2h, 0}};
    return ex;
}

} // namespace worked
