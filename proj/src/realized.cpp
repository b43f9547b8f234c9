#include "gck/realized.hpp"

#include "gck/errors.hpp"

namespace gck {

RealizedModule::RealizedModule(GroupPtr group, int dimension,
                               std::vector<Matrix<Cyclotomic>> generator_matrices,
                               const ClassFunction* declared_character)
    : group_(std::move(group)), dim_(dimension) {
    const auto& gens = group_->generator_indices();
    if (generator_matrices.size() != gens.size())
        throw ShapeMismatch("one action matrix per generator required");
    for (const auto& m : generator_matrices)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw ShapeMismatch("generator matrices must be square of equal size");

    // Element indices are canonical (lexicographic), not BFS order, so fill
    // the per-element matrices by walking each BFS chain with memoization.
    action_.resize(group_->order());
    std::vector<char> filled(group_->order(), 0);
    action_[0] = Matrix<Cyclotomic>::identity(dim_);
    filled[0] = 1;
    auto fill = [&](auto&& self, int e) -> const Matrix<Cyclotomic>& {
        if (!filled[e]) {
            auto [gi, parent] = group_->bfs_link()[e];
            action_[e] = generator_matrices[gi] * self(self, parent);
            filled[e] = 1;
        }
        return action_[e];
    };
    for (long e = 1; e < group_->order(); ++e) fill(fill, static_cast<int>(e));

    // Relations hold iff multiplication is respected on (generator, element).
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (long e = 0; e < group_->order(); ++e) {
            if (!(generator_matrices[gi] * action_[e] ==
                  action_[group_->mul(gens[gi], static_cast<int>(e))]))
                throw NotEquivariant("generator matrices do not satisfy the group relations");
        }

    if (declared_character) {
        ClassFunction actual = character();
        if (!(actual == *declared_character))
            throw NotEquivariant("module character does not match its declared class function");
    }
}

ClassFunction RealizedModule::character() const {
    ClassFunction chi{group_, std::vector<Cyclotomic>(group_->num_classes())};
    for (int c = 0; c < group_->num_classes(); ++c) {
        const Matrix<Cyclotomic>& m = action_[group_->class_representative(c)];
        Cyclotomic tr;
        for (int i = 0; i < dim_; ++i) tr += m.at(i, i);
        chi.values[c] = tr;
    }
    return chi;
}

RealizedModule regular_module(const GroupPtr& G, long order_cap) {
    if (G->order() > order_cap)
        throw OrderCapExceeded("regular module capped at order " + std::to_string(order_cap));
    const int n = static_cast<int>(G->order());
    std::vector<Matrix<Cyclotomic>> gens;
    for (int g : G->generator_indices()) {
        Matrix<Cyclotomic> m(n, n);
        for (int x = 0; x < n; ++x) m.at(G->mul(g, x), x) = Cyclotomic(1);
        gens.push_back(std::move(m));
    }
    return RealizedModule(G, n, std::move(gens));
}

RealizedModule isotypic_component(const RealizedModule& m, const ClassFunction& rho) {
    const GroupPtr& G = m.group();
    if (rho.group != G) throw GroupMismatch("irreducible over a different group");
    if (!(inner_product_cyclotomic(rho, rho) == Cyclotomic(1)))
        throw NotIrreducible("class function has norm != 1");

    const int d = m.dimension();
    Matrix<Cyclotomic> idem(d, d);
    for (long e = 0; e < G->order(); ++e) {
        Cyclotomic coeff = rho.values[G->class_of(static_cast<int>(e))].conjugate();
        if (coeff.is_zero()) continue;
        idem = idem + m.action(static_cast<int>(e)) * coeff;
    }
    Cyclotomic scale = rho.degree() / Cyclotomic(Int(G->order()));
    idem = idem * scale;

    Matrix<Cyclotomic> basis = column_space_basis(idem);
    std::vector<Matrix<Cyclotomic>> gens;
    for (int g : G->generator_indices())
        gens.push_back(solve_exact(basis, m.action(g) * basis));
    return RealizedModule(G, basis.cols(), std::move(gens));
}

Matrix<Cyclotomic> invariants_basis(const RealizedModule& m, const Subgroup& H) {
    if (H.parent() != m.group()) throw NotASubgroup("subgroup of a different group");
    const int d = m.dimension();
    Matrix<Cyclotomic> avg(d, d);
    for (int h : H.elements()) avg = avg + m.action(h);
    avg = avg * (Cyclotomic(1) / Cyclotomic(Int(H.order())));
    return column_space_basis(avg);
}

} // namespace gck
