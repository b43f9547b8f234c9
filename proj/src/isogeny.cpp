#include "gck/isogeny.hpp"

#include <algorithm>
#include <sstream>

#include "gck/errors.hpp"

namespace gck {

namespace {

// Canonical (minimal) representative of the double coset H g H' containing g.
int double_coset_rep(const GroupPtr& G, const Subgroup& H, const Subgroup& H2, int g) {
    int best = -1;
    for (int a : H.elements())
        for (int b : H2.elements()) {
            int x = G->mul(G->mul(a, g), b);
            if (best < 0 || x < best) best = x;
        }
    return best;
}

Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Positive rational content: the terms divided by it are coprime integers.
Rat rational_content(const std::vector<Rat>& values) {
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& v : values) {
        if (v == 0) continue;
        num_gcd = gcd(num_gcd, v.get_num());
        den_lcm = lcm(den_lcm, v.get_den());
    }
    if (num_gcd == 0) return Rat(1);
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    return rat_abs(content);
}

} // namespace

IsogenyExpression f_phi_expression(const PermModuleHom& phi) {
    const GSet& dom = *phi.domain;
    const GSet& cod = *phi.codomain;
    const GroupPtr& G = dom.group;

    IsogenyExpression e;
    e.group = G;
    e.target_blocks = static_cast<int>(dom.blocks.size());
    e.source_blocks = static_cast<int>(cod.blocks.size());
    e.blocks.resize(static_cast<size_t>(e.target_blocks) * e.source_blocks);

    for (int i = 0; i < e.target_blocks; ++i) {
        const Subgroup& Hi = dom.blocks[i].stabilizer;
        int base_i = dom.blocks[i].base_point;
        for (int j = 0; j < e.source_blocks; ++j) {
            const Subgroup& Hj = cod.blocks[j].stabilizer;
            ExpressionBlock& blk = e.block(i, j);
            blk.target_stabilizer = Hi;
            blk.source_stabilizer = Hj;
            blk.prefactor = Rat(1, Hi.order() * Hj.order());
            blk.prefactor.canonicalize();

            // Coordinates of the (i,j) component in the double-coset basis:
            // the column at base_i must be constant on the cosets inside each
            // double coset of H_i \ G / H'_j.
            std::map<int, Int> coset_coeff; // double-coset rep -> coordinate
            for (int p : cod.blocks[j].points) {
                const Int& c = phi.matrix.at(p, base_i);
                int rep = double_coset_rep(G, Hi, Hj, cod.transporter[p]);
                auto it = coset_coeff.find(rep);
                if (it == coset_coeff.end())
                    coset_coeff.emplace(rep, c);
                else if (it->second != c)
                    throw NotInBasisSpan(
                        "component is not constant on a double coset (internal error)");
            }
            for (const auto& [rep, c] : coset_coeff) {
                if (c == 0) continue;
                for (int a : Hi.elements())
                    for (int b : Hj.elements()) blk.terms[G->mul(G->mul(a, rep), b)] = c;
            }
        }
    }
    return e;
}

IsogenyExpression simplify_expression(const IsogenyExpression& e) {
    IsogenyExpression out = e;
    for (ExpressionBlock& blk : out.blocks) {
        if (blk.simplified) continue;
        const GroupPtr& G = out.group;
        const Subgroup& H = blk.target_stabilizer;
        const Subgroup& H2 = blk.source_stabilizer;
        const bool same_stab = H.elements() == H2.elements();

        // Group the element terms by double coset; each collapses onto its
        // canonical representative with weight coefficient * |coset|.
        std::map<int, std::pair<Rat, long>> collapsed; // rep -> (coeff, size)
        for (const auto& [t, c] : blk.terms) {
            int rep = double_coset_rep(G, H, H2, t);
            auto it = collapsed.find(rep);
            if (it == collapsed.end())
                collapsed.emplace(rep, std::make_pair(Rat(c), 1L));
            else {
                if (Rat(c) != it->second.first)
                    throw NotInBasisSpan("terms are not constant on a double coset");
                it->second.second += 1;
            }
        }

        Rat identity_coeff = blk.identity_coefficient;
        std::vector<std::pair<int, Rat>> weighted;
        for (const auto& [rep, cs] : collapsed) {
            Rat w = blk.prefactor * cs.first * Rat(cs.second);
            w.canonicalize();
            if (w == 0) continue;
            if (same_stab && H.contains(rep)) {
                // (pi_H)_* o t_* o (pi_H)^* with t in H equals |H| * id.
                identity_coeff += w * Rat(H.order());
            } else {
                weighted.emplace_back(rep, w);
            }
        }
        identity_coeff.canonicalize();

        std::vector<Rat> values;
        for (auto& [rep, w] : weighted) values.push_back(w);
        Rat content = rational_content(values);

        blk.terms.clear();
        for (auto& [rep, w] : weighted) {
            Rat t = w / content;
            t.canonicalize();
            blk.terms[rep] = t.get_num(); // exact integer by construction
        }
        blk.prefactor = weighted.empty() ? Rat(1) : content;
        blk.identity_coefficient = identity_coeff;
        blk.simplified = true;
    }
    return out;
}

IsogenyExpression dual_expression(const IsogenyExpression& e) {
    IsogenyExpression out;
    out.group = e.group;
    out.target_blocks = e.source_blocks;
    out.source_blocks = e.target_blocks;
    out.blocks.resize(e.blocks.size());
    for (int i = 0; i < e.target_blocks; ++i)
        for (int j = 0; j < e.source_blocks; ++j) {
            const ExpressionBlock& src = e.block(i, j);
            ExpressionBlock dst;
            dst.target_stabilizer = src.source_stabilizer;
            dst.source_stabilizer = src.target_stabilizer;
            dst.prefactor = src.prefactor;
            dst.identity_coefficient = src.identity_coefficient;
            dst.simplified = false;
            for (const auto& [t, c] : src.terms) dst.terms[e.group->inv(t)] = c;
            out.block(j, i) = std::move(dst);
        }
    // Keep the normal form stable: a simplified input yields simplified output.
    bool was_simplified = true;
    for (const auto& blk : e.blocks) was_simplified = was_simplified && blk.simplified;
    if (was_simplified) return simplify_expression(out);
    return out;
}

bool IsogenyExpression::operator==(const IsogenyExpression& rhs) const {
    if (group != rhs.group || target_blocks != rhs.target_blocks ||
        source_blocks != rhs.source_blocks)
        return false;
    for (size_t k = 0; k < blocks.size(); ++k) {
        const ExpressionBlock& a = blocks[k];
        const ExpressionBlock& b = rhs.blocks[k];
        if (a.target_stabilizer.elements() != b.target_stabilizer.elements() ||
            a.source_stabilizer.elements() != b.source_stabilizer.elements() ||
            a.prefactor != b.prefactor || a.identity_coefficient != b.identity_coefficient ||
            a.terms != b.terms)
            return false;
    }
    return true;
}

std::string IsogenyExpression::str() const {
    std::ostringstream out;
    for (int i = 0; i < target_blocks; ++i)
        for (int j = 0; j < source_blocks; ++j) {
            const ExpressionBlock& blk = block(i, j);
            out << "f[" << i << "][" << j << "] = ";
            bool empty = blk.terms.empty() && blk.identity_coefficient == 0;
            if (empty) {
                out << "0\n";
                continue;
            }
            bool first = true;
            if (blk.identity_coefficient != 0) {
                if (blk.identity_coefficient != 1)
                    out << to_string(blk.identity_coefficient) << "*";
                out << "id";
                first = false;
            }
            for (const auto& [t, c] : blk.terms) {
                if (!first) out << " + ";
                first = false;
                Rat w = blk.prefactor * Rat(c);
                w.canonicalize();
                if (w != 1) out << to_string(w) << "*";
                out << "(pi_H" << i << ")_*";
                if (t != 0) out << " o (" << group->perm(t).cycle_string() << ")_*";
                out << " o (pi_H'" << j << ")^*";
            }
            out << "\n";
        }
    return out.str();
}

IsogenyVerdict isogeny_criterion(const PermModuleHom& phi, const VirtualCharacter& v) {
    const CharacterTablePtr& table = v.table;
    if (table->group() != phi.domain->group)
        throw GroupMismatch("character and hom over different groups");
    if (!v.is_effective())
        throw NotVirtualCharacter("criterion requires an effective character");

    const GroupPtr& G = table->group();
    RealizedModule reg = regular_module(G);

    IsogenyVerdict verdict;
    verdict.certified = true;
    for (int i = 0; i < table->size(); ++i) {
        if (v.multiplicities[i] <= 0) continue;
        RealizedModule isotypic = isotypic_component(reg, table->irreducible(i));
        Matrix<Cyclotomic> block = induced_map_on_invariants(phi, isotypic);
        long d = table->degree(i).get_si(); // block = single-copy block tensor identity_d
        IsogenyWitness shape;
        shape.irreducible = i;
        shape.rows = block.rows() / static_cast<int>(d);
        shape.cols = block.cols() / static_cast<int>(d);
        shape.rank = rank_fraction_free(block) / static_cast<int>(d);
        verdict.tested_blocks.push_back(shape);
        bool invertible = shape.rows == shape.cols && shape.rank == shape.rows;
        if (!invertible && verdict.certified) {
            verdict.certified = false;
            verdict.witness = shape;
        }
    }
    return verdict;
}

} // namespace gck
