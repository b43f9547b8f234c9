#pragma once

// Independent oracles used to derive expected test values. Everything here
// is deliberately naive and separate from the library's implementation paths.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gck/group.hpp"
#include "gck/perm.hpp"

namespace oracle {

// Brute-force closure of a set of permutations (no Group machinery).
inline std::set<std::vector<int>> closure_images(int degree,
                                                 const std::vector<gck::Perm>& gens) {
    std::set<std::vector<int>> seen;
    std::vector<gck::Perm> frontier{gck::Perm::identity(degree)};
    seen.insert(gck::Perm::identity(degree).images());
    while (!frontier.empty()) {
        gck::Perm p = frontier.back();
        frontier.pop_back();
        for (const gck::Perm& g : gens) {
            gck::Perm q = g * p;
            if (seen.insert(q.images()).second) frontier.push_back(q);
        }
    }
    return seen;
}

// All subgroups as element-index sets, enumerated from generator tuples of
// size <= 4 (sufficient for |G| <= 24: minimal generator number is bounded
// by log2 |G| < 5, attained only at C2^4 of order 16).
inline std::set<std::vector<int>> all_subgroups_by_tuples(const gck::GroupPtr& G) {
    const int n = static_cast<int>(G->order());
    std::set<std::vector<int>> found;
    auto close = [&](std::vector<int> gens) {
        std::set<int> elems{0};
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            int e = frontier.back();
            frontier.pop_back();
            for (int g : gens) {
                int x = G->mul(g, e);
                if (elems.insert(x).second) frontier.push_back(x);
            }
        }
        found.insert(std::vector<int>(elems.begin(), elems.end()));
    };
    close({});
    for (int a = 1; a < n; ++a) {
        close({a});
        for (int b = a + 1; b < n; ++b) {
            close({a, b});
            for (int c = b + 1; c < n; ++c) {
                close({a, b, c});
                for (int d = c + 1; d < n; ++d) close({a, b, c, d});
            }
        }
    }
    return found;
}

// Named small-group roster shared by sweep tests; all orders <= 48.
inline std::vector<std::pair<std::string, gck::GroupPtr>> group_roster_24() {
    using gck::Perm;
    auto mk = [](int deg, std::vector<std::string> gens) {
        std::vector<Perm> ps;
        for (const auto& s : gens) ps.push_back(Perm::parse(s, deg));
        return gck::group_from_generators(deg, ps);
    };
    return {
        {"C1", mk(1, {})},
        {"C2", mk(2, {"(0 1)"})},
        {"C3", mk(3, {"(0 1 2)"})},
        {"C4", mk(4, {"(0 1 2 3)"})},
        {"V4", mk(4, {"(0 1)(2 3)", "(0 2)(1 3)"})},
        {"C6", mk(6, {"(0 1 2 3 4 5)"})},
        {"S3", mk(3, {"(0 1 2)", "(0 1)"})},
        {"D4", mk(4, {"(0 1 2 3)", "(0 3)(1 2)"})},
        {"Q8", mk(8, {"(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"})},
        {"C2xC2xC2", mk(6, {"(0 1)", "(2 3)", "(4 5)"})},
        {"D5", mk(5, {"(0 1 2 3 4)", "(1 4)(2 3)"})},
        {"A4", mk(4, {"(0 1 2)", "(0 1)(2 3)"})},
        {"D6", mk(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"})},
        {"C12", mk(7, {"(0 1 2 3)", "(4 5 6)"})},
        {"S4", mk(4, {"(0 1 2 3)", "(0 1)"})},
    };
}

// Extension of the roster up to order 48 for character-table sweeps.
inline std::vector<std::pair<std::string, gck::GroupPtr>> group_roster_48() {
    using gck::Perm;
    auto mk = [](int deg, std::vector<std::string> gens) {
        std::vector<Perm> ps;
        for (const auto& s : gens) ps.push_back(Perm::parse(s, deg));
        return gck::group_from_generators(deg, ps);
    };
    auto roster = group_roster_24();
    roster.push_back({"C2xC2xC2xC2", mk(8, {"(0 1)", "(2 3)", "(4 5)", "(6 7)"})});
    roster.push_back({"F20", mk(5, {"(0 1 2 3 4)", "(1 2 4 3)"})});
    roster.push_back({"C3xS3", mk(6, {"(0 1 2)", "(3 4 5)", "(3 4)"})});
    roster.push_back({"C2xA4", mk(6, {"(0 1 2)", "(0 1)(2 3)", "(4 5)"})});
    roster.push_back({"S4xC2", mk(6, {"(0 1 2 3)", "(0 1)", "(4 5)"})});
    // GL(2,3) on the 8 nonzero vectors of F_3^2, indexed
    // (1,0),(2,0),(0,1),(1,1),(2,1),(0,2),(1,2),(2,2):
    // [[1,1],[0,1]], [[0,2],[1,0]], [[2,0],[0,1]].
    roster.push_back({"GL23", mk(8, {"(2 3 4)(5 7 6)", "(0 2 1 5)(3 4 7 6)", "(0 1)(3 4)(6 7)"})});
    return roster;
}

} // namespace oracle
