#include "gck/permmod.hpp"

#include <algorithm>
#include <sstream>

#include "gck/errors.hpp"
#include "gck/realized.hpp"

namespace gck {

int point_of(const GSet& s, int elem_index, int block) {
    return s.act(elem_index, s.blocks[block].base_point);
}

namespace {

void check_equivariance(const PermModuleHom& phi) {
    const GSet& dom = *phi.domain;
    const GSet& cod = *phi.codomain;
    if (dom.group != cod.group) throw GroupMismatch("hom between G-sets of different groups");
    if (phi.matrix.rows() != cod.size() || phi.matrix.cols() != dom.size())
        throw ShapeMismatch("hom matrix shape does not match the G-sets");
    const GroupPtr& G = dom.group;
    for (size_t gi = 0; gi < G->generator_indices().size(); ++gi) {
        for (int x = 0; x < dom.size(); ++x) {
            // column of g*x must equal the g-permuted column of x
            int gx = dom.gen_action[gi][x];
            for (int r = 0; r < cod.size(); ++r) {
                if (phi.matrix.at(cod.gen_action[gi][r], gx) != phi.matrix.at(r, x)) {
                    std::ostringstream msg;
                    msg << "equivariance fails at generator "
                        << G->perm(G->generator_indices()[gi]).cycle_string()
                        << " and domain basis vector " << x;
                    throw NotEquivariant(msg.str());
                }
            }
        }
    }
}

} // namespace

std::vector<PermModuleHom> hom_basis(const GroupPtr& G, const Subgroup& H,
                                     const Subgroup& H2) {
    auto dom = std::make_shared<const GSet>(gset_from_stabilizers(G, {H}));
    auto cod = std::make_shared<const GSet>(gset_from_stabilizers(G, {H2}));
    std::vector<PermModuleHom> basis;
    for (const DoubleCoset& dc : double_cosets(G, H, H2)) {
        // phi(H) = sum of the cosets wH2 contained in HgH2.
        Matrix<Int> base_col(cod->size(), 1);
        for (int q = 0; q < cod->size(); ++q)
            if (std::binary_search(dc.elements.begin(), dc.elements.end(), cod->transporter[q]))
                base_col.at(q, 0) = 1;
        Matrix<Int> m(cod->size(), dom->size());
        for (int x = 0; x < dom->size(); ++x) {
            int u = dom->transporter[x];
            for (int q = 0; q < cod->size(); ++q)
                if (base_col.at(q, 0) == 1) m.at(cod->act(u, q), x) = 1;
        }
        PermModuleHom phi{dom, cod, std::move(m)};
        check_equivariance(phi);
        basis.push_back(std::move(phi));
    }
    return basis;
}

PermModuleHom hom_from_matrix(const GSetPtr& s, const GSetPtr& s2, Matrix<Int> matrix) {
    PermModuleHom phi{s, s2, std::move(matrix)};
    check_equivariance(phi);
    return phi;
}

PermModuleHom hom_from_images(const GSetPtr& s, const GSetPtr& s2,
                              const std::vector<Matrix<Int>>& base_images) {
    if (base_images.size() != s->blocks.size())
        throw ShapeMismatch("one base image per domain block required");
    Matrix<Int> m(s2->size(), s->size());
    for (size_t b = 0; b < s->blocks.size(); ++b) {
        const Matrix<Int>& img = base_images[b];
        if (img.rows() != s2->size() || img.cols() != 1)
            throw ShapeMismatch("base image must be a codomain coordinate column");
        for (int x : s->blocks[b].points) {
            int u = s->transporter[x];
            for (int q = 0; q < s2->size(); ++q) {
                if (img.at(q, 0) == 0) continue;
                m.at(s2->act(u, q), x) += img.at(q, 0);
            }
        }
    }
    PermModuleHom phi{s, s2, std::move(m)};
    check_equivariance(phi);
    return phi;
}

Matrix<Int> matrix_with_ordering(const PermModuleHom& phi,
                                 const std::vector<BasisVector>& domain_order,
                                 const std::vector<BasisVector>& codomain_order) {
    auto points_for = [](const GSet& s, const std::vector<BasisVector>& order) {
        if (static_cast<int>(order.size()) != s.size())
            throw ShapeMismatch("ordering must enumerate every point exactly once");
        std::vector<int> pts;
        std::vector<char> seen(s.size(), 0);
        for (const BasisVector& bv : order) {
            int p = point_of(s, bv.element, bv.block);
            if (seen[p]) throw ShapeMismatch("ordering repeats a point");
            seen[p] = 1;
            pts.push_back(p);
        }
        return pts;
    };
    std::vector<int> dom_pts = points_for(*phi.domain, domain_order);
    std::vector<int> cod_pts = points_for(*phi.codomain, codomain_order);
    Matrix<Int> m(phi.codomain->size(), phi.domain->size());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = phi.matrix.at(cod_pts[r], dom_pts[c]);
    return m;
}

PermModuleHom dual_hom(const PermModuleHom& phi) {
    return PermModuleHom{phi.codomain, phi.domain, phi.matrix.transpose()};
}

PermModuleHom compose(const PermModuleHom& phi2, const PermModuleHom& phi) {
    if (phi.codomain->group != phi2.domain->group ||
        phi.codomain->size() != phi2.domain->size())
        throw ShapeMismatch("compose: inner G-sets do not match");
    return PermModuleHom{phi.domain, phi2.codomain, phi2.matrix * phi.matrix};
}

Matrix<Cyclotomic> induced_map_on_invariants(const PermModuleHom& phi,
                                             const RealizedModule& m) {
    const GSet& dom = *phi.domain;
    const GSet& cod = *phi.codomain;
    if (m.group() != dom.group) throw GroupMismatch("module over a different group");
    const GroupPtr& G = dom.group;
    const int d = m.dimension();

    // Invariant bases per block; the map goes from codomain-side invariants
    // (f is determined by its values at the codomain base points) to
    // domain-side invariants (values of f o phi at the domain base points).
    std::vector<Matrix<Cyclotomic>> dom_bases, cod_bases;
    std::vector<int> dom_dims, cod_dims;
    for (const auto& blk : dom.blocks) {
        dom_bases.push_back(invariants_basis(m, blk.stabilizer));
        dom_dims.push_back(dom_bases.back().cols());
    }
    for (const auto& blk : cod.blocks) {
        cod_bases.push_back(invariants_basis(m, blk.stabilizer));
        cod_dims.push_back(cod_bases.back().cols());
    }
    int rows_total = 0, cols_total = 0;
    for (int v : dom_dims) rows_total += v;
    for (int v : cod_dims) cols_total += v;

    Matrix<Cyclotomic> out(rows_total, cols_total);
    int col_off = 0;
    for (size_t j = 0; j < cod.blocks.size(); ++j) {
        // T_{ij} = sum over points p of codomain block j of
        // phi_matrix[p, base_i] * action(transporter_p); applied to a vector
        // w in M^{H_j'} it gives (f o phi)(base_i) for the hom f with
        // f(base_j) = w.
        for (int bcol = 0; bcol < cod_dims[j]; ++bcol) {
            Matrix<Cyclotomic> w(d, 1);
            for (int r = 0; r < d; ++r) w.at(r, 0) = cod_bases[j].at(r, bcol);
            int row_off = 0;
            for (size_t i = 0; i < dom.blocks.size(); ++i) {
                int base_i = dom.blocks[i].base_point;
                Matrix<Cyclotomic> v(d, 1);
                for (int p : cod.blocks[j].points) {
                    const Int& c = phi.matrix.at(p, base_i);
                    if (c == 0) continue;
                    Matrix<Cyclotomic> term = m.action(cod.transporter[p]) * w;
                    v = v + term * Cyclotomic(c);
                }
                // Coordinates of v in the invariant basis of block i.
                if (dom_dims[i] > 0) {
                    Matrix<Cyclotomic> coords = solve_exact(dom_bases[i], v);
                    for (int r = 0; r < dom_dims[i]; ++r)
                        out.at(row_off + r, col_off + bcol) = coords.at(r, 0);
                } else if (!v.is_zero()) {
                    throw NotInBasisSpan("induced image escapes the invariant space");
                }
                row_off += dom_dims[i];
            }
        }
        col_off += cod_dims[j];
    }
    return out;
}

} // namespace gck
