#include <doctest.h>

#include <random>

#include "gck/errors.hpp"
#include "gck/rh.hpp"

#include "oracles.hpp"

using namespace gck;

namespace {
GroupPtr s3() {
    return group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
}
} // namespace

TEST_CASE("equivariant RH reproduces the S3 worked cover: V = 2 rho") {
    GroupPtr G = s3();
    CharacterTablePtr t = character_table(G);
    Subgroup c3 = subgroup_generated(G, {Perm::parse("(0 1 2)", 3)});
    CoverData c{G, c3, 0, {c3, c3, c3}};

    VirtualCharacter v = equivariant_rh(c, t);
    CHECK(v.multiplicities == std::vector<Int>{0, 0, 2});
    CHECK(v.degree() == 4);
    CHECK(component_genus(c) == 1);
    CHECK(rh_consistency(c, t)); // degree 4 = 2 * [G:H] * g = 2*2*1
}

TEST_CASE("unramified genus-1 self-cover: V = 2 * trivial") {
    GroupPtr triv = group_from_generators(1, {});
    CharacterTablePtr t = character_table(triv);
    CoverData c{triv, full_subgroup(triv), 1, {}};
    VirtualCharacter v = equivariant_rh(c, t);
    CHECK(v.multiplicities == std::vector<Int>{2});
    CHECK(v.degree() == 2);
    CHECK(component_genus(c) == 1);
    CHECK(rh_consistency(c, t));
}

TEST_CASE("genus-2 hyperelliptic double cover: degree 4, no trivial part") {
    GroupPtr c2 = group_from_generators(2, {Perm::parse("(0 1)", 2)});
    CharacterTablePtr t = character_table(c2);
    Subgroup h = full_subgroup(c2);
    CoverData c{c2, h, 0, {h, h, h, h, h, h}};
    VirtualCharacter v = equivariant_rh(c, t);
    CHECK(v.degree() == 4);
    CHECK(v.multiplicities[0] == 0); // no trivial constituent
    CHECK(v.multiplicities[1] == 4); // sign^4
    CHECK(component_genus(c) == 2);  // 2g-2 = -4+6
    CHECK(rh_consistency(c, t));
}

TEST_CASE("component genus oracle cases") {
    GroupPtr G = s3();
    Subgroup c3 = subgroup_generated(G, {Perm::parse("(0 1 2)", 3)});

    // Triple cover of P1 fully branched at two points is P1 again (x -> x^3):
    // 2g - 2 = 3(-2) + 2*2 = -2, so g = 0, and the data is consistent.
    CoverData two_points{G, c3, 0, {c3, c3}};
    CHECK(component_genus(two_points) == 0);
    CHECK(rh_consistency(two_points, character_table(G)));

    // A single fully branched point has no non-negative genus solution.
    CoverData one_point{G, c3, 0, {c3}};
    CHECK_THROWS_AS(component_genus(one_point), InconsistentBranchData);

    // Odd right-hand side: C2 over genus 0 with a single branch point.
    GroupPtr c2 = group_from_generators(2, {Perm::parse("(0 1)", 2)});
    CoverData odd{c2, full_subgroup(c2), 0, {full_subgroup(c2)}};
    CHECK_THROWS_AS(component_genus(odd), InconsistentBranchData);

    // Degree-1 unramified: genus of the base.
    CoverData unram{G, trivial_subgroup(G), 3, {}};
    CHECK(component_genus(unram) == 3);

    // Genus-0 trivial cover: zero character, degree 0, consistent.
    GroupPtr triv = group_from_generators(1, {});
    CoverData nothing{triv, full_subgroup(triv), 0, {}};
    CHECK(component_genus(nothing) == 0);
    CHECK(rh_consistency(nothing, character_table(triv)));
}

TEST_CASE("branch stabilizers must be cyclic subgroups of H") {
    GroupPtr a4 = group_from_generators(4, {Perm::parse("(0 1 2)", 4), Perm::parse("(0 1)(2 3)", 4)});
    Subgroup v4 = subgroup_generated(
        a4, {Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)});
    CoverData noncyclic{a4, full_subgroup(a4), 0, {v4}};
    CHECK_THROWS_AS(validate_cover(noncyclic), NonCyclicStabilizer);

    // Branch stabilizer not inside H.
    GroupPtr G = s3();
    Subgroup c3 = subgroup_generated(G, {Perm::parse("(0 1 2)", 3)});
    Subgroup h = subgroup_generated(G, {Perm::parse("(0 1)", 3)});
    CoverData outside{G, c3, 0, {h}};
    CHECK_THROWS_AS(validate_cover(outside), NotASubgroup);
}

TEST_CASE("conjugate branch stabilizers give the same character") {
    GroupPtr G = s3();
    CharacterTablePtr t = character_table(G);
    Subgroup h01 = subgroup_generated(G, {Perm::parse("(0 1)", 3)});
    Subgroup h12 = subgroup_generated(G, {Perm::parse("(1 2)", 3)});
    CoverData a{G, full_subgroup(G), 1, {h01, h01}};
    CoverData b{G, full_subgroup(G), 1, {h12, h01}};
    CHECK(equivariant_rh(a, t) == equivariant_rh(b, t));
}

TEST_CASE("random consistent covers: degree identity and effectivity (200 cases)") {
    // Branch data generated by Riemann existence: elements h_1..h_r of a
    // roster group with product forced to the identity (plus a commutator
    // pair for genus-1 bases); the component group is what they generate.
    auto roster = oracle::group_roster_24();
    std::mt19937 rng(20240817);
    int produced = 0;
    while (produced < 200) {
        const auto& [name, G] = roster[rng() % roster.size()];
        CAPTURE(name);
        CharacterTablePtr t = character_table(G);
        long base_genus = rng() % 2;
        int r = 2 + static_cast<int>(rng() % 3);
        std::vector<int> word;
        int prod = 0;
        if (base_genus == 1) {
            int a = static_cast<int>(rng() % G->order());
            int b = static_cast<int>(rng() % G->order());
            // [a, b] = a b a^-1 b^-1 contributes to the product relation.
            prod = G->mul(G->mul(a, b), G->mul(G->inv(a), G->inv(b)));
            word.push_back(a);
            word.push_back(b);
        }
        std::vector<int> branch;
        for (int i = 0; i + 1 < r; ++i) {
            int x = static_cast<int>(rng() % G->order());
            branch.push_back(x);
            prod = G->mul(prod, x);
        }
        branch.push_back(G->inv(prod));

        std::vector<int> gens = word;
        for (int x : branch) gens.push_back(x);
        Subgroup H = subgroup_generated(G, gens);
        CoverData c{G, H, base_genus, {}};
        for (int x : branch)
            if (x != 0) c.branch_stabilizers.push_back(subgroup_generated(G, std::vector<int>{x}));

        VirtualCharacter v = equivariant_rh(c, t);
        long genus = component_genus(c);
        long index = G->order() / H.order();
        CHECK(v.degree() == Int(2 * index * genus));
        CHECK(v.is_effective());
        CHECK(rh_consistency(c, t));
        ++produced;
    }
}
