#include <doctest.h>

#include "gck/descent.hpp"
#include "gck/errors.hpp"
#include "gck/rh.hpp"

#include "oracles.hpp"

using namespace gck;

namespace {

GroupPtr s3() {
    return group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
}

GroupPtr c3() { return group_from_generators(3, {Perm::parse("(0 1 2)", 3)}); }

} // namespace

TEST_CASE("linear expressions") {
    LinExpr e = LinExpr::symbol("rkE");
    LinExpr d = LinExpr::symbol("rkD");
    LinExpr sum = e + d.scaled(Rat(2)) + LinExpr::value(Rat(1));
    CHECK(sum.str() == "2*rkD + rkE + 1");
    CHECK((sum - sum).is_zero());
    CHECK(LinExpr::value(Rat(-3, 2)).str() == "-3/2");
    CHECK((e - e + LinExpr::value(Rat(5))).is_constant());
}

TEST_CASE("rank solver reproduces the S3 derivation symbolically") {
    GroupPtr G = s3();
    CharacterTablePtr t = character_table(G);
    Subgroup h = subgroup_generated(G, {Perm::parse("(0 1)", 3)});
    Subgroup g = subgroup_generated(G, {Perm::parse("(0 1 2)", 3)});

    std::vector<RankObservation> obs{
        {full_subgroup(G), RankKind::mordell_weil, LinExpr::value(Rat(0))},
        {h, RankKind::mordell_weil, LinExpr::symbol("rkE")},
        {g, RankKind::mordell_weil, LinExpr::symbol("rkD")},
    };
    MultiplicitySolution sol = rank_solver(t, obs);
    REQUIRE(sol.status == MultiplicitySolution::Status::determined);
    CHECK(sol.multiplicities[0] == LinExpr::value(Rat(0)));      // n = 0
    CHECK(sol.multiplicities[1] == LinExpr::symbol("rkD"));      // m = rk Jac_D
    CHECK(sol.multiplicities[2] == LinExpr::symbol("rkE"));      // r = rk E

    // Solutions are invariant under replacing H by a conjugate.
    Subgroup h_conj = subgroup_generated(G, {Perm::parse("(1 2)", 3)});
    std::vector<RankObservation> obs2 = obs;
    obs2[1].subgroup = h_conj;
    CHECK(rank_solver(t, obs2).multiplicities == sol.multiplicities);

    // Substituting the solution back reproduces each observation.
    for (const RankObservation& o : obs) {
        ClassFunction ind = induce_trivial(o.subgroup, G);
        LinExpr total;
        for (int i = 0; i < t->size(); ++i)
            total = total + sol.multiplicities[i].scaled(inner_product(ind, t->irreducible(i)));
        CHECK(total == o.rank);
    }
}

TEST_CASE("selmer decomposition reproduces eps^rkpD + rho^rkpE") {
    GroupPtr G = s3();
    CharacterTablePtr t = character_table(G);
    Subgroup h = subgroup_generated(G, {Perm::parse("(0 1)", 3)});
    Subgroup g = subgroup_generated(G, {Perm::parse("(0 1 2)", 3)});

    std::vector<RankObservation> obs{
        {full_subgroup(G), RankKind::p_selmer, LinExpr::value(Rat(0)), 2},
        {h, RankKind::p_selmer, LinExpr::symbol("rkpE"), 2},
        {g, RankKind::p_selmer, LinExpr::symbol("rkpD"), 2},
    };
    MultiplicitySolution sol = selmer_decomposition(t, obs);
    REQUIRE(sol.status == MultiplicitySolution::Status::determined);
    CHECK(sol.multiplicities[0] == LinExpr::value(Rat(0)));
    CHECK(sol.multiplicities[1] == LinExpr::symbol("rkpD"));
    CHECK(sol.multiplicities[2] == LinExpr::symbol("rkpE"));
    CHECK(self_duality_check(sol));
}

TEST_CASE("underdetermined: single observation with a vanishing constraint") {
    GroupPtr G = s3();
    CharacterTablePtr t = character_table(G);
    VirtualCharacter v{t, {0, 0, 2}}; // V = 2 rho

    std::vector<RankObservation> obs{
        {full_subgroup(G), RankKind::mordell_weil, LinExpr::value(Rat(0))}};
    MultiplicitySolution sol = rank_solver(t, obs, v);
    REQUIRE(sol.status == MultiplicitySolution::Status::underdetermined);
    REQUIRE(sol.free_irreducibles == std::vector<int>{2});
    CHECK(sol.multiplicities[0] == LinExpr::value(Rat(0)));
    CHECK(sol.multiplicities[1] == LinExpr::value(Rat(0)));
    CHECK(sol.multiplicities[2] == LinExpr::symbol("m(rho2)"));

    CHECK_THROWS_AS(self_duality_check(sol), UnderdeterminedInput);
}

TEST_CASE("numeric infeasibility: fixed space larger than the total") {
    // rank 3 over the trivial subgroup but rank 5 invariants cannot happen:
    // m(triv) = 5 forces sum m_rho dim rho >= 5 > 3.
    GroupPtr G = group_from_generators(2, {Perm::parse("(0 1)", 2)});
    CharacterTablePtr t = character_table(G);
    std::vector<RankObservation> obs{
        {trivial_subgroup(G), RankKind::mordell_weil, LinExpr::value(Rat(3))},
        {full_subgroup(G), RankKind::mordell_weil, LinExpr::value(Rat(5))},
    };
    MultiplicitySolution sol = rank_solver(t, obs);
    CHECK(sol.status == MultiplicitySolution::Status::inconsistent);
    CHECK(sol.witness.find("m(rho1)") != std::string::npos); // m(rho1) = -2

    // The transposed data (total 5, fixed 3) is perfectly consistent.
    std::vector<RankObservation> ok{
        {trivial_subgroup(G), RankKind::mordell_weil, LinExpr::value(Rat(5))},
        {full_subgroup(G), RankKind::mordell_weil, LinExpr::value(Rat(3))},
    };
    MultiplicitySolution sol2 = rank_solver(t, ok);
    REQUIRE(sol2.status == MultiplicitySolution::Status::determined);
    CHECK(sol2.multiplicities[0] == LinExpr::value(Rat(3)));
    CHECK(sol2.multiplicities[1] == LinExpr::value(Rat(2)));
}

TEST_CASE("self-duality conflict over C3") {
    GroupPtr G = c3();
    CharacterTablePtr t = character_table(G);
    REQUIRE(t->size() == 3);
    REQUIRE(t->conjugate_index(1) == 2);

    // Vanishing kills the trivial character and one of the two conjugate
    // lines; the observations then force the other line to multiplicity 1,
    // violating m_rho = m_{rho*}.
    VirtualCharacter v{t, {0, 0, 1}};
    std::vector<RankObservation> obs{
        {trivial_subgroup(G), RankKind::p_selmer, LinExpr::value(Rat(1)), 3},
        {full_subgroup(G), RankKind::p_selmer, LinExpr::value(Rat(0)), 3},
    };
    MultiplicitySolution sol = selmer_decomposition(t, obs, v);
    CHECK(sol.status == MultiplicitySolution::Status::inconsistent);
    CHECK(sol.witness.find("self-duality") != std::string::npos);

    // Without the vanishing constraint the same data is fine: (0, 1/2, 1/2)
    // is not integral though, so it must still be flagged.
    MultiplicitySolution sol2 = selmer_decomposition(t, obs);
    CHECK(sol2.status == MultiplicitySolution::Status::inconsistent);
}

TEST_CASE("vanishing constraints") {
    GroupPtr G = s3();
    CharacterTablePtr t = character_table(G);
    CHECK(vanishing_constraints(VirtualCharacter{t, {0, 0, 2}}) == std::vector<int>{0, 1});
    CHECK(vanishing_constraints(VirtualCharacter{t, {1, 1, 2}}).empty());
    CHECK(vanishing_constraints(VirtualCharacter{t, {0, 0, 0}}) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(vanishing_constraints(VirtualCharacter{t, {-1, 0, 0}}), NotVirtualCharacter);
}

TEST_CASE("self_duality_check on explicit solutions") {
    GroupPtr G = c3();
    CharacterTablePtr t = character_table(G);
    MultiplicitySolution sym{t,
                             MultiplicitySolution::Status::determined,
                             {LinExpr::value(Rat(0)), LinExpr::value(Rat(1)),
                              LinExpr::value(Rat(1))},
                             {},
                             ""};
    CHECK(self_duality_check(sym));
    MultiplicitySolution asym{t,
                              MultiplicitySolution::Status::determined,
                              {LinExpr::value(Rat(0)), LinExpr::value(Rat(1)),
                               LinExpr::value(Rat(0))},
                              {},
                              ""};
    CHECK_FALSE(self_duality_check(asym));
}

TEST_CASE("mixed observation kinds are rejected") {
    GroupPtr G = s3();
    CharacterTablePtr t = character_table(G);
    std::vector<RankObservation> obs{
        {full_subgroup(G), RankKind::mordell_weil, LinExpr::value(Rat(0))},
        {trivial_subgroup(G), RankKind::p_selmer, LinExpr::value(Rat(0)), 2},
    };
    CHECK_THROWS_AS(rank_solver(t, obs), MixedKinds);
}

TEST_CASE("descent driven by an RH character end to end") {
    // V from the worked cover kills everything but rho; a Mordell-Weil rank
    // observation on the full group then pins the remaining multiplicity.
    GroupPtr G = s3();
    CharacterTablePtr t = character_table(G);
    Subgroup c3sub = subgroup_generated(G, {Perm::parse("(0 1 2)", 3)});
    VirtualCharacter v = equivariant_rh(CoverData{G, c3sub, 0, {c3sub, c3sub, c3sub}}, t);
    Subgroup h = subgroup_generated(G, {Perm::parse("(0 1)", 3)});
    std::vector<RankObservation> obs{
        {full_subgroup(G), RankKind::mordell_weil, LinExpr::value(Rat(0))},
        {h, RankKind::mordell_weil, LinExpr::value(Rat(2))},
    };
    MultiplicitySolution sol = rank_solver(t, obs, v);
    REQUIRE(sol.status == MultiplicitySolution::Status::determined);
    CHECK(sol.multiplicities[2] == LinExpr::value(Rat(2)));
}
