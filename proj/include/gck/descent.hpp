#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gck/classfun.hpp"
#include "gck/group.hpp"
#include "gck/numeric.hpp"

namespace gck {

// A rational linear expression in named symbols (e.g. "rkE"), the value space
// for symbolic rank observations and solver outputs.
struct LinExpr {
    Rat constant = Rat(0);
    std::map<std::string, Rat> terms;

    static LinExpr symbol(const std::string& name);
    static LinExpr value(const Rat& q);

    LinExpr operator+(const LinExpr& rhs) const;
    LinExpr operator-(const LinExpr& rhs) const;
    LinExpr scaled(const Rat& q) const;
    bool operator==(const LinExpr& rhs) const;
    bool is_zero() const;
    bool is_constant() const { return terms.empty(); }
    std::string str() const;
};

enum class RankKind { mordell_weil, p_selmer };

struct RankObservation {
    Subgroup subgroup;
    RankKind kind = RankKind::mordell_weil;
    LinExpr rank;
    long prime = 0; // display only, for p_selmer
};

struct MultiplicitySolution {
    enum class Status { determined, underdetermined, inconsistent };
    CharacterTablePtr table;
    Status status = Status::determined;
    // One expression per irreducible. Free multiplicities of underdetermined
    // systems appear as synthetic symbols "m(<name>)".
    std::vector<LinExpr> multiplicities;
    std::vector<int> free_irreducibles;
    std::string witness; // the violated constraint, for inconsistent systems
};

// Display name for an irreducible: "triv" or "rho<i>".
std::string irreducible_name(const CharacterTable& table, int index);

/*
 * Solve sum_rho m_rho dim rho^H = rank(H) over the observations, with
 * dim rho^H = <Ind_H^G 1, rho>. A supplied effective character V forces
 * m_rho = 0 whenever <rho, V> = 0; p_selmer observations additionally force
 * the self-duality m_rho = m_{rho*}. Symbolic ranks are carried through
 * exactly; non-negativity and integrality are checked only on fully numeric
 * multiplicities.
 */
MultiplicitySolution rank_solver(const CharacterTablePtr& table,
                                 const std::vector<RankObservation>& observations,
                                 const std::optional<VirtualCharacter>& vanishing = {});

// rank_solver with the self-duality constraint always active.
MultiplicitySolution selmer_decomposition(const CharacterTablePtr& table,
                                          const std::vector<RankObservation>& observations,
                                          const std::optional<VirtualCharacter>& vanishing = {});

// Indices of irreducibles rho with <rho, V> = 0.
std::vector<int> vanishing_constraints(const VirtualCharacter& v);

// m_rho == m_{rho*} for every irreducible. UnderdeterminedInput unless the
// solution is determined.
bool self_duality_check(const MultiplicitySolution& solution);

} // namespace gck
