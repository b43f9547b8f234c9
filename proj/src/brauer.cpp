#include "gck/brauer.hpp"

#include <algorithm>
#include <map>

#include "gck/errors.hpp"

namespace gck {

namespace {

// Multisets of class indices of sizes 1..max_blocks, lexicographic.
void enumerate_multisets(int num_classes, int max_blocks,
                         std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_blocks) return;
        for (int c = start; c < num_classes; ++c) {
            cur.push_back(c);
            self(self, c);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

} // namespace

std::vector<BrauerRelation> brauer_relations(const GroupPtr& G, int max_blocks,
                                             long order_cap) {
    if (G->order() > order_cap)
        throw OrderCapExceeded("Brauer search capped at order " + std::to_string(order_cap));

    std::vector<Subgroup> classes = subgroups_up_to_conjugacy(G);
    const int k = G->num_classes();

    // Integer fixed-point vector of each transitive G-set G/H.
    std::vector<std::vector<long>> fixed(classes.size(), std::vector<long>(k, 0));
    for (size_t s = 0; s < classes.size(); ++s) {
        ClassFunction chi = induce_trivial(classes[s], G);
        for (int c = 0; c < k; ++c) fixed[s][c] = chi.values[c].integer_value().get_si();
    }

    std::vector<std::vector<int>> multisets;
    enumerate_multisets(static_cast<int>(classes.size()), max_blocks, multisets);

    std::map<std::vector<long>, std::vector<int>> by_vector; // char vector -> multiset ids
    for (size_t mi = 0; mi < multisets.size(); ++mi) {
        std::vector<long> v(k, 0);
        for (int s : multisets[mi])
            for (int c = 0; c < k; ++c) v[c] += fixed[s][c];
        by_vector[v].push_back(static_cast<int>(mi));
    }

    std::vector<BrauerRelation> relations;
    for (const auto& [vec, ids] : by_vector) {
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = a + 1; b < ids.size(); ++b) {
                const std::vector<int>& ma = multisets[ids[a]];
                const std::vector<int>& mb = multisets[ids[b]];
                if (!disjoint(ma, mb)) continue;
                std::vector<Subgroup> sa, sb;
                for (int s : ma) sa.push_back(classes[s]);
                for (int s : mb) sb.push_back(classes[s]);
                // Confirm with the honest checks.
                GSet ga = gset_from_stabilizers(G, sa);
                GSet gb = gset_from_stabilizers(G, sb);
                ClassFunction ca = permutation_character(ga);
                if (!(ca == permutation_character(gb))) continue;
                if (isomorphic_gsets(ga, gb)) continue;
                relations.push_back(BrauerRelation{std::move(sa), std::move(sb), std::move(ca)});
            }
    }
    return relations;
}

} // namespace gck
