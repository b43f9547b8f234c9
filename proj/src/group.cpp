#include "gck/group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "gck/errors.hpp"
#include "gck/numeric.hpp"

namespace gck {

GroupPtr group_from_generators(int degree, const std::vector<Perm>& gens, long order_cap) {
    if (degree < 0) throw InvalidPermutation("degree must be non-negative");
    for (const Perm& g : gens)
        if (g.degree() != degree)
            throw InvalidPermutation("generator degree mismatch");

    std::set<std::vector<int>> seen;
    std::vector<Perm> elems;
    Perm id = Perm::identity(degree);
    seen.insert(id.images());
    elems.push_back(id);
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const Perm& g : gens) {
            Perm next = g * elems[head];
            if (seen.insert(next.images()).second) {
                if (static_cast<long>(elems.size()) + 1 > order_cap)
                    throw OrderCapExceeded("group closure exceeds order cap " +
                                           std::to_string(order_cap));
                elems.push_back(std::move(next));
            }
        }
    }
    std::sort(elems.begin(), elems.end());

    auto G = std::shared_ptr<Group>(new Group());
    G->degree_ = degree;
    G->elems_ = std::move(elems);
    const long n = G->order();

    auto index_of = [&](const Perm& p) {
        auto it = std::lower_bound(G->elems_.begin(), G->elems_.end(), p);
        return static_cast<int>(it - G->elems_.begin());
    };

    for (const Perm& g : gens) G->gen_idx_.push_back(index_of(g));
    std::sort(G->gen_idx_.begin(), G->gen_idx_.end());
    G->gen_idx_.erase(std::unique(G->gen_idx_.begin(), G->gen_idx_.end()), G->gen_idx_.end());

    G->inv_.resize(n);
    for (long i = 0; i < n; ++i) G->inv_[i] = index_of(G->elems_[i].inverse());

    // BFS from the identity: every element as generator * earlier element.
    G->link_.assign(n, {-1, -1});
    std::vector<char> visited(n, 0);
    std::queue<int> q;
    visited[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        for (size_t gi = 0; gi < G->gen_idx_.size(); ++gi) {
            Perm next = G->elems_[G->gen_idx_[gi]] * G->elems_[cur];
            int ni = index_of(next);
            if (!visited[ni]) {
                visited[ni] = 1;
                G->link_[ni] = {static_cast<int>(gi), cur};
                q.push(ni);
            }
        }
    }

    // Conjugacy classes: orbits of conjugation by generators, swept in
    // canonical order so representatives are minimal and classes sorted.
    G->class_of_.assign(n, -1);
    for (long e = 0; e < n; ++e) {
        if (G->class_of_[e] >= 0) continue;
        int cls = static_cast<int>(G->classes_.size());
        std::vector<int> members;
        G->class_of_[e] = cls;
        members.push_back(static_cast<int>(e));
        for (size_t head = 0; head < members.size(); ++head) {
            for (int gi : G->gen_idx_) {
                Perm c = G->elems_[gi] * G->elems_[members[head]] * G->elems_[G->inv_[gi]];
                int ci = index_of(c);
                if (G->class_of_[ci] < 0) {
                    G->class_of_[ci] = cls;
                    members.push_back(ci);
                }
            }
        }
        std::sort(members.begin(), members.end());
        G->classes_.push_back(std::move(members));
    }
    return G;
}

int Group::index_of(const Perm& p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || !(*it == p))
        throw GroupMismatch("permutation is not an element of this group");
    return static_cast<int>(it - elems_.begin());
}

bool Group::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    return it != elems_.end() && *it == p;
}

int Group::mul(int a, int b) const { return index_of(elems_[a] * elems_[b]); }

int Group::element_order(int a) const { return elems_[a].order(); }

long Group::exponent() const {
    Int e = 1;
    for (const auto& cls : classes_) e = lcm(e, Int(elems_[cls[0]].order()));
    return e.get_si();
}

std::string Group::canonical_hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<uint64_t>(degree_));
    for (const Perm& p : elems_)
        for (int v : p.images()) mix(static_cast<uint64_t>(v));
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> element_indices,
                   std::vector<int> generator_indices, bool validate)
    : parent_(std::move(parent)), elems_(std::move(element_indices)),
      gens_(std::move(generator_indices)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty() || elems_[0] != 0)
        throw NotASubgroup("subgroup must contain the identity");
    if (!validate) return;
    for (int a : elems_) {
        if (a < 0 || a >= parent_->order())
            throw NotASubgroup("element index out of range");
        if (!contains(parent_->inv(a)))
            throw NotASubgroup("subgroup not closed under inverses");
        for (int b : elems_)
            if (!contains(parent_->mul(a, b)))
                throw NotASubgroup("subgroup not closed under multiplication");
    }
    for (int g : gens_)
        if (!contains(g)) throw NotASubgroup("declared generator outside subgroup");
}

bool Subgroup::contains(int elem_index) const {
    return std::binary_search(elems_.begin(), elems_.end(), elem_index);
}

bool Subgroup::is_cyclic() const {
    for (int e : elems_)
        if (parent_->element_order(e) == order()) return true;
    return false;
}

Subgroup subgroup_generated(const GroupPtr& G, const std::vector<int>& gen_indices) {
    std::set<int> seen{0};
    std::vector<int> elems{0};
    for (size_t head = 0; head < elems.size(); ++head)
        for (int g : gen_indices) {
            int next = G->mul(g, elems[head]);
            if (seen.insert(next).second) elems.push_back(next);
        }
    std::sort(elems.begin(), elems.end());
    return Subgroup(G, std::move(elems), gen_indices, /*validate=*/false);
}

Subgroup subgroup_generated(const GroupPtr& G, const std::vector<Perm>& gens) {
    std::vector<int> idx;
    for (const Perm& p : gens) {
        if (!G->contains(p))
            throw NotASubgroup("generator " + p.cycle_string() + " is not in the group");
        idx.push_back(G->index_of(p));
    }
    return subgroup_generated(G, idx);
}

Subgroup trivial_subgroup(const GroupPtr& G) { return Subgroup(G, {0}, {}); }

Subgroup full_subgroup(const GroupPtr& G) {
    std::vector<int> all(G->order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> gens;
    for (int g : G->generator_indices()) gens.push_back(g);
    return Subgroup(G, std::move(all), std::move(gens), /*validate=*/false);
}

Subgroup conjugate_subgroup(const Subgroup& H, int g) {
    const GroupPtr& G = H.parent();
    std::vector<int> elems, gens;
    for (int e : H.elements()) elems.push_back(G->conj(g, e));
    for (int e : H.generators()) gens.push_back(G->conj(g, e));
    std::sort(elems.begin(), elems.end());
    return Subgroup(G, std::move(elems), std::move(gens), /*validate=*/false);
}

std::vector<int> subgroup_class_key(const Subgroup& H) {
    const GroupPtr& G = H.parent();
    std::vector<int> best = H.elements();
    for (long g = 1; g < G->order(); ++g) {
        std::vector<int> cand;
        cand.reserve(best.size());
        for (int e : H.elements()) cand.push_back(G->conj(static_cast<int>(g), e));
        std::sort(cand.begin(), cand.end());
        if (cand < best) best = std::move(cand);
    }
    return best;
}

static void check_same_parent(const GroupPtr& G, const Subgroup& H) {
    if (H.parent() != G) throw NotASubgroup("subgroup belongs to a different group");
}

std::vector<int> left_transversal(const GroupPtr& G, const Subgroup& H) {
    check_same_parent(G, H);
    std::vector<char> covered(G->order(), 0);
    std::vector<int> reps;
    for (long e = 0; e < G->order(); ++e) {
        if (covered[e]) continue;
        reps.push_back(static_cast<int>(e));
        for (int h : H.elements()) covered[G->mul(static_cast<int>(e), h)] = 1;
    }
    return reps;
}

std::vector<DoubleCoset> double_cosets(const GroupPtr& G, const Subgroup& H,
                                       const Subgroup& H2) {
    check_same_parent(G, H);
    check_same_parent(G, H2);
    std::vector<char> covered(G->order(), 0);
    std::vector<DoubleCoset> result;
    for (long e = 0; e < G->order(); ++e) {
        if (covered[e]) continue;
        DoubleCoset dc;
        dc.representative = static_cast<int>(e);
        dc.left = H;
        dc.right = H2;
        for (int a : H.elements())
            for (int b : H2.elements()) {
                int x = G->mul(G->mul(a, static_cast<int>(e)), b);
                if (!covered[x]) {
                    covered[x] = 1;
                    dc.elements.push_back(x);
                }
            }
        std::sort(dc.elements.begin(), dc.elements.end());
        result.push_back(std::move(dc));
    }
    return result;
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& G) {
    if (G->order() > kDefaultOrderCap)
        throw OrderCapExceeded("subgroup enumeration capped at order " +
                               std::to_string(kDefaultOrderCap));

    // Seed with all cyclic subgroups, then extend each known subgroup by one
    // cyclic generator until nothing new appears. Dedup on element sets.
    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> subs; // (elements, gens)
    auto add = [&](const std::vector<int>& gens) -> bool {
        Subgroup s = subgroup_generated(G, gens);
        if (seen.insert(s.elements()).second) {
            subs.emplace_back(s.elements(), gens);
            return true;
        }
        return false;
    };
    add({});
    std::vector<int> cyclic_gens;
    for (long e = 1; e < G->order(); ++e) cyclic_gens.push_back(static_cast<int>(e));
    for (int g : cyclic_gens) add({g});
    for (size_t head = 0; head < subs.size(); ++head) {
        auto [elems, gens] = subs[head];
        for (int g : cyclic_gens) {
            if (std::binary_search(elems.begin(), elems.end(), g)) continue;
            std::vector<int> next_gens = gens;
            next_gens.push_back(g);
            add(next_gens);
        }
    }

    // Collapse to conjugacy classes via canonical class keys.
    std::map<std::vector<int>, std::vector<int>> class_reps; // key -> gens of first rep
    for (auto& [elems, gens] : subs) {
        Subgroup s(G, elems, gens, /*validate=*/false);
        std::vector<int> key = subgroup_class_key(s);
        if (!class_reps.count(key)) class_reps[key] = gens;
    }
    std::vector<Subgroup> reps;
    for (auto& [key, gens] : class_reps) {
        // Re-base the representative on the canonical (minimal) conjugate.
        Subgroup canon(G, key, {}, /*validate=*/false);
        std::vector<int> canon_gens;
        std::vector<int> closure{0};
        std::set<int> have{0};
        for (int e : key) {
            if (have.count(e)) continue;
            canon_gens.push_back(e);
            Subgroup grown = subgroup_generated(G, canon_gens);
            for (int x : grown.elements()) have.insert(x);
            if (static_cast<long>(have.size()) == canon.order()) break;
        }
        reps.emplace_back(G, key, canon_gens, /*validate=*/false);
    }
    std::stable_sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return reps;
}

} // namespace gck
