#include <doctest.h>

#include <map>
#include <set>

#include "gck/errors.hpp"
#include "gck/group.hpp"

#include "oracles.hpp"

using namespace gck;

TEST_CASE("permutation basics and cycle notation") {
    Perm p = Perm::parse("(0 1 2)(3 4)", 5);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p.cycle_string() == "(0 1 2)(3 4)");
    CHECK(Perm::identity(4).cycle_string() == "()");
    CHECK(Perm::parse("()", 3) == Perm::identity(3));
    CHECK(p.order() == 6);
    CHECK(p.sign() == -1);
    CHECK((p * p.inverse()).is_identity());

    CHECK_THROWS_AS(Perm({0, 0, 1}), InvalidPermutation);
    CHECK_THROWS_AS(Perm::parse("(0 5)", 3), ParseError);

    // Composition convention: (p*q)(x) = p(q(x)), q acts first.
    Perm g = Perm::parse("(0 1 2)", 3);
    Perm h = Perm::parse("(0 1)", 3);
    CHECK((h * g)(0) == 0); // g sends 0 to 1, h sends 1 to 0
    CHECK((g * h)(0) == 2);
}

TEST_CASE("group closure: S3, trivial, Klein four") {
    GroupPtr s3 = group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
    CHECK(s3->order() == 6);

    GroupPtr triv = group_from_generators(1, {});
    CHECK(triv->order() == 1);

    // Brute-force closure oracle agrees for the Klein four group.
    std::vector<Perm> vgens{Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)};
    GroupPtr v4 = group_from_generators(4, vgens);
    auto oracle_set = oracle::closure_images(4, vgens);
    CHECK(v4->order() == static_cast<long>(oracle_set.size()));
    CHECK(v4->order() == 4);
    for (const Perm& p : v4->elements()) CHECK(oracle_set.count(p.images()) == 1);

    CHECK_THROWS_AS(group_from_generators(3, {Perm::parse("(0 1 2)", 3)}, 2), OrderCapExceeded);
}

TEST_CASE("canonical element order: identity first, lexicographic") {
    GroupPtr s3 = group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
    CHECK(s3->perm(0).is_identity());
    for (long e = 1; e < s3->order(); ++e) CHECK(s3->perm(e - 1) < s3->perm(e));
}

TEST_CASE("conjugacy classes") {
    GroupPtr s3 = group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
    const auto& classes = s3->conjugacy_classes();
    REQUIRE(classes.size() == 3);
    // Identity class is the singleton first class; sizes 1, 3, 2.
    CHECK(classes[0] == std::vector<int>{0});
    std::multiset<size_t> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{1, 2, 3});

    GroupPtr triv = group_from_generators(1, {});
    CHECK(triv->conjugacy_classes().size() == 1);

    GroupPtr v4 = group_from_generators(4, {Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)});
    CHECK(v4->conjugacy_classes().size() == 4); // abelian: all singletons
    for (const auto& c : v4->conjugacy_classes()) CHECK(c.size() == 1);

    // Class sizes divide |G| on the whole roster.
    for (const auto& [name, G] : oracle::group_roster_24()) {
        CAPTURE(name);
        for (const auto& c : G->conjugacy_classes()) CHECK(G->order() % c.size() == 0);
    }
}

TEST_CASE("left transversal") {
    GroupPtr s3 = group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
    Subgroup h = subgroup_generated(s3, {Perm::parse("(0 1)", 3)});
    auto reps = left_transversal(s3, h);
    CHECK(reps.size() == 3);
    CHECK(reps[0] == 0); // identity first

    CHECK(left_transversal(s3, full_subgroup(s3)).size() == 1);
    CHECK(left_transversal(s3, trivial_subgroup(s3)).size() == 6);

    // (rep, h) -> rep*h is a bijection onto G, across the roster.
    for (const auto& [name, G] : oracle::group_roster_24()) {
        CAPTURE(name);
        for (const Subgroup& H : subgroups_up_to_conjugacy(G)) {
            auto t = left_transversal(G, H);
            std::set<int> hit;
            for (int r : t)
                for (int x : H.elements()) hit.insert(G->mul(r, x));
            CHECK(static_cast<long>(hit.size()) == G->order());
        }
    }
}

TEST_CASE("double cosets") {
    GroupPtr s3 = group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
    Subgroup h = subgroup_generated(s3, {Perm::parse("(0 1)", 3)});
    Subgroup c3 = subgroup_generated(s3, {Perm::parse("(0 1 2)", 3)});

    auto dc1 = double_cosets(s3, h, c3);
    REQUIRE(dc1.size() == 1);
    CHECK(dc1[0].elements.size() == 6);

    auto dc2 = double_cosets(s3, h, h);
    REQUIRE(dc2.size() == 2);
    std::multiset<size_t> sizes{dc2[0].elements.size(), dc2[1].elements.size()};
    CHECK(sizes == std::multiset<size_t>{2, 4});

    auto dc3 = double_cosets(s3, trivial_subgroup(s3), trivial_subgroup(s3));
    CHECK(dc3.size() == 6);

    // Partition property and the size formula |HgH'| = |H||H'|/|H n gH'g^-1|,
    // exhaustively over the roster.
    for (const auto& [name, G] : oracle::group_roster_24()) {
        CAPTURE(name);
        auto subs = subgroups_up_to_conjugacy(G);
        for (const Subgroup& H : subs)
            for (const Subgroup& H2 : subs) {
                size_t total = 0;
                for (const DoubleCoset& dc : double_cosets(G, H, H2)) {
                    total += dc.elements.size();
                    CHECK(dc.representative == dc.elements[0]);
                    long meet = 0;
                    for (int x : H.elements())
                        if (H2.contains(G->conj(G->inv(dc.representative), x))) ++meet;
                    CHECK(static_cast<long>(dc.elements.size()) * meet == H.order() * H2.order());
                }
                CHECK(static_cast<long>(total) == G->order());
            }
    }
}

TEST_CASE("inverse anti-homomorphism on roster groups") {
    for (const auto& [name, G] : oracle::group_roster_48()) {
        CAPTURE(name);
        if (G->order() > 48) continue;
        for (long a = 0; a < G->order(); ++a)
            for (long b = 0; b < G->order(); ++b)
                CHECK(G->inv(G->mul(static_cast<int>(a), static_cast<int>(b))) ==
                      G->mul(G->inv(static_cast<int>(b)), G->inv(static_cast<int>(a))));
    }
}

TEST_CASE("subgroups up to conjugacy") {
    GroupPtr s3 = group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
    auto classes = subgroups_up_to_conjugacy(s3);
    REQUIRE(classes.size() == 4);
    CHECK(classes[0].order() == 1);
    CHECK(classes[1].order() == 2);
    CHECK(classes[2].order() == 3);
    CHECK(classes[3].order() == 6);

    GroupPtr v4 = group_from_generators(4, {Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)});
    CHECK(subgroups_up_to_conjugacy(v4).size() == 5);

    GroupPtr triv = group_from_generators(1, {});
    CHECK(subgroups_up_to_conjugacy(triv).size() == 1);
}

TEST_CASE("subgroup enumeration matches the exhaustive tuple oracle (<= 24)") {
    for (const auto& [name, G] : oracle::group_roster_24()) {
        CAPTURE(name);
        auto oracle_subs = oracle::all_subgroups_by_tuples(G);
        // Expand each conjugacy class representative by conjugation.
        std::set<std::vector<int>> expanded;
        for (const Subgroup& H : subgroups_up_to_conjugacy(G))
            for (long g = 0; g < G->order(); ++g)
                expanded.insert(conjugate_subgroup(H, static_cast<int>(g)).elements());
        CHECK(expanded == oracle_subs);
    }
}

TEST_CASE("roster groups have the advertised orders") {
    std::map<std::string, long> expected{
        {"C1", 1},  {"C2", 2},  {"C3", 3},  {"C4", 4},  {"V4", 4},         {"C6", 6},
        {"S3", 6},  {"D4", 8},  {"Q8", 8},  {"C2xC2xC2", 8},               {"D5", 10},
        {"A4", 12}, {"D6", 12}, {"C12", 12}, {"S4", 24}, {"C2xC2xC2xC2", 16},
        {"F20", 20}, {"C3xS3", 18}, {"C2xA4", 24}, {"S4xC2", 48}, {"GL23", 48}};
    for (const auto& [name, G] : oracle::group_roster_48()) {
        CAPTURE(name);
        REQUIRE(expected.count(name) == 1);
        CHECK(G->order() == expected[name]);
    }
}

TEST_CASE("subgroup validation") {
    GroupPtr s3 = group_from_generators(3, {Perm::parse("(0 1 2)", 3), Perm::parse("(0 1)", 3)});
    // Not closed: {e, (0 1 2)} without its inverse-square.
    int g = s3->index_of(Perm::parse("(0 1 2)", 3));
    CHECK_THROWS_AS(Subgroup(s3, {0, g}, {}), NotASubgroup);
    CHECK_THROWS_AS(subgroup_generated(s3, {Perm::parse("(0 1 2 3)", 4)}), NotASubgroup);

    Subgroup h = subgroup_generated(s3, {Perm::parse("(0 1)", 3)});
    CHECK(h.order() == 2);
    CHECK(h.is_cyclic());
    CHECK(s3->order() % h.order() == 0); // Lagrange
}
