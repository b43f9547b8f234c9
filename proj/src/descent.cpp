#include "gck/descent.hpp"

#include <algorithm>
#include <sstream>

#include "gck/errors.hpp"

namespace gck {

LinExpr LinExpr::symbol(const std::string& name) {
    LinExpr e;
    e.terms[name] = Rat(1);
    return e;
}

LinExpr LinExpr::value(const Rat& q) {
    LinExpr e;
    e.constant = q;
    return e;
}

LinExpr LinExpr::operator+(const LinExpr& rhs) const {
    LinExpr out = *this;
    out.constant += rhs.constant;
    for (const auto& [k, v] : rhs.terms) {
        out.terms[k] += v;
        if (out.terms[k] == 0) out.terms.erase(k);
    }
    return out;
}

LinExpr LinExpr::operator-(const LinExpr& rhs) const { return *this + rhs.scaled(Rat(-1)); }

LinExpr LinExpr::scaled(const Rat& q) const {
    LinExpr out;
    if (q == 0) return out;
    out.constant = constant * q;
    for (const auto& [k, v] : terms) out.terms[k] = v * q;
    return out;
}

bool LinExpr::operator==(const LinExpr& rhs) const {
    return constant == rhs.constant && terms == rhs.terms;
}

bool LinExpr::is_zero() const { return constant == 0 && terms.empty(); }

std::string LinExpr::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : terms) {
        if (first) {
            if (v < 0) out << "-";
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        Rat a = v < 0 ? Rat(-v) : v;
        if (a != 1) out << to_string(a) << "*";
        out << k;
        first = false;
    }
    if (first) return to_string(constant);
    if (constant != 0) {
        out << (constant < 0 ? " - " : " + ");
        Rat a = constant < 0 ? Rat(-constant) : constant;
        out << to_string(a);
    }
    return out.str();
}

std::string irreducible_name(const CharacterTable& table, int index) {
    if (index == table.trivial_index()) return "triv";
    return "rho" + std::to_string(index);
}

std::vector<int> vanishing_constraints(const VirtualCharacter& v) {
    if (!v.is_effective()) throw NotVirtualCharacter("vanishing constraint needs an effective V");
    std::vector<int> zero;
    for (int i = 0; i < v.table->size(); ++i)
        if (v.multiplicities[i] == 0) zero.push_back(i);
    return zero;
}

namespace {

struct Constraint {
    std::vector<Rat> coeff; // per irreducible
    LinExpr rhs;
    std::string description;
};

// Gaussian elimination over Q with symbolic right-hand sides. Returns false
// on a contradictory row (0 = nonzero).
bool eliminate(std::vector<Constraint>& rows, int unknowns, std::vector<int>& pivot_of_col) {
    pivot_of_col.assign(unknowns, -1);
    int row = 0;
    for (int col = 0; col < unknowns && row < static_cast<int>(rows.size()); ++col) {
        int pr = -1;
        for (int r = row; r < static_cast<int>(rows.size()); ++r)
            if (rows[r].coeff[col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[pr], rows[row]);
        Rat inv = Rat(1) / rows[row].coeff[col];
        for (int j = 0; j < unknowns; ++j) rows[row].coeff[j] *= inv;
        rows[row].rhs = rows[row].rhs.scaled(inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == row) continue;
            Rat f = rows[r].coeff[col];
            if (f == 0) continue;
            for (int j = 0; j < unknowns; ++j) rows[r].coeff[j] -= f * rows[row].coeff[j];
            rows[r].rhs = rows[r].rhs - rows[row].rhs.scaled(f);
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (int r = row; r < static_cast<int>(rows.size()); ++r)
        if (!rows[r].rhs.is_zero()) return false;
    return true;
}

// The first constraint (in input order) whose inclusion makes the system
// infeasible; used as the inconsistency witness.
std::string first_violated(const std::vector<Constraint>& all, int unknowns) {
    for (size_t n = 1; n <= all.size(); ++n) {
        std::vector<Constraint> prefix(all.begin(), all.begin() + n);
        std::vector<int> pv;
        if (!eliminate(prefix, unknowns, pv)) return all[n - 1].description;
    }
    return all.empty() ? "" : all.back().description;
}

MultiplicitySolution solve(const CharacterTablePtr& table,
                           const std::vector<RankObservation>& observations,
                           const std::optional<VirtualCharacter>& vanishing,
                           bool force_self_duality) {
    const GroupPtr& G = table->group();
    const int k = table->size();

    if (!observations.empty()) {
        RankKind kind = observations.front().kind;
        for (const RankObservation& obs : observations)
            if (obs.kind != kind)
                throw MixedKinds("observations mix mordell_weil and p_selmer kinds");
        if (kind == RankKind::p_selmer) force_self_duality = true;
    }

    std::vector<Constraint> rows;
    for (const RankObservation& obs : observations) {
        if (obs.subgroup.parent() != G)
            throw NotASubgroup("observation subgroup belongs to a different group");
        Constraint c;
        c.coeff.resize(k);
        ClassFunction ind = induce_trivial(obs.subgroup, G);
        for (int i = 0; i < k; ++i)
            c.coeff[i] = inner_product(ind, table->irreducible(i));
        c.rhs = obs.rank;
        std::ostringstream desc;
        desc << "rank(H) with |H| = " << obs.subgroup.order() << ": ";
        bool first = true;
        for (int i = 0; i < k; ++i) {
            if (c.coeff[i] == 0) continue;
            if (!first) desc << " + ";
            first = false;
            if (c.coeff[i] != 1) desc << to_string(c.coeff[i]) << "*";
            desc << "m(" << irreducible_name(*table, i) << ")";
        }
        desc << " = " << obs.rank.str();
        c.description = desc.str();
        rows.push_back(std::move(c));
    }
    if (vanishing) {
        if (vanishing->table != table)
            throw GroupMismatch("vanishing character over a different table");
        for (int i : vanishing_constraints(*vanishing)) {
            Constraint c;
            c.coeff.assign(k, Rat(0));
            c.coeff[i] = 1;
            c.rhs = LinExpr::value(Rat(0));
            c.description = "vanishing (Tate-module multiplicity 0): m(" +
                            irreducible_name(*table, i) + ") = 0";
            rows.push_back(std::move(c));
        }
    }
    if (force_self_duality) {
        for (int i = 0; i < k; ++i) {
            int j = table->conjugate_index(i);
            if (j <= i) continue;
            Constraint c;
            c.coeff.assign(k, Rat(0));
            c.coeff[i] = 1;
            c.coeff[j] = -1;
            c.rhs = LinExpr::value(Rat(0));
            c.description = "self-duality: m(" + irreducible_name(*table, i) + ") = m(" +
                            irreducible_name(*table, j) + ")";
            rows.push_back(std::move(c));
        }
    }

    MultiplicitySolution sol;
    sol.table = table;
    sol.multiplicities.assign(k, LinExpr{});

    std::vector<Constraint> reduced = rows;
    std::vector<int> pivot_of_col;
    if (!eliminate(reduced, k, pivot_of_col)) {
        sol.status = MultiplicitySolution::Status::inconsistent;
        sol.witness = first_violated(rows, k);
        return sol;
    }

    // Free multiplicities become synthetic symbols.
    for (int col = 0; col < k; ++col)
        if (pivot_of_col[col] < 0) {
            sol.free_irreducibles.push_back(col);
            sol.multiplicities[col] = LinExpr::symbol("m(" + irreducible_name(*table, col) + ")");
        }
    for (int col = 0; col < k; ++col) {
        int r = pivot_of_col[col];
        if (r < 0) continue;
        LinExpr value = reduced[r].rhs;
        for (int j = col + 1; j < k; ++j) {
            if (reduced[r].coeff[j] == 0 || pivot_of_col[j] >= 0) continue;
            value = value - sol.multiplicities[j].scaled(reduced[r].coeff[j]);
        }
        sol.multiplicities[col] = value;
    }
    sol.status = sol.free_irreducibles.empty() ? MultiplicitySolution::Status::determined
                                               : MultiplicitySolution::Status::underdetermined;

    // Feasibility on fully numeric determined solutions.
    if (sol.status == MultiplicitySolution::Status::determined) {
        for (int i = 0; i < k; ++i) {
            const LinExpr& m = sol.multiplicities[i];
            if (!m.is_constant()) continue;
            if (m.constant < 0 || m.constant.get_den() != 1) {
                sol.status = MultiplicitySolution::Status::inconsistent;
                sol.witness = "m(" + irreducible_name(*table, i) + ") = " + m.str() +
                              " is not a non-negative integer";
                return sol;
            }
        }
    }
    return sol;
}

} // namespace

MultiplicitySolution rank_solver(const CharacterTablePtr& table,
                                 const std::vector<RankObservation>& observations,
                                 const std::optional<VirtualCharacter>& vanishing) {
    return solve(table, observations, vanishing, /*force_self_duality=*/false);
}

MultiplicitySolution selmer_decomposition(const CharacterTablePtr& table,
                                          const std::vector<RankObservation>& observations,
                                          const std::optional<VirtualCharacter>& vanishing) {
    return solve(table, observations, vanishing, /*force_self_duality=*/true);
}

bool self_duality_check(const MultiplicitySolution& solution) {
    if (solution.status != MultiplicitySolution::Status::determined)
        throw UnderdeterminedInput("self-duality check needs a determined solution");
    for (int i = 0; i < solution.table->size(); ++i) {
        int j = solution.table->conjugate_index(i);
        if (!(solution.multiplicities[i] == solution.multiplicities[j])) return false;
    }
    return true;
}

} // namespace gck
