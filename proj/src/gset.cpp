#include "gck/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gck/errors.hpp"

namespace gck {

namespace {

// Apply an arbitrary element by unwinding the group's BFS chain into its
// generator word (innermost generator acts first).
int fold_action(const GroupPtr& G, const std::vector<std::vector<int>>& gen_action,
                int elem, int point) {
    static thread_local std::vector<int> word;
    word.clear();
    while (elem != 0) {
        auto [gi, parent] = G->bfs_link()[elem];
        word.push_back(gi);
        elem = parent;
    }
    for (auto it = word.rbegin(); it != word.rend(); ++it) point = gen_action[*it][point];
    return point;
}

} // namespace

int GSet::act(int elem_index, int point) const {
    return fold_action(group, gen_action, elem_index, point);
}

int GSet::act_right(int elem_index, int point) const {
    if (!right) throw NoRightAction("this G-set carries no recorded right action");
    // phi.(gen*parent) = (phi.gen).parent: the outermost factor acts first.
    int elem = elem_index;
    while (elem != 0) {
        auto [gi, parent] = right->group->bfs_link()[elem];
        point = right->gen_action[gi][point];
        elem = parent;
    }
    return point;
}

Perm GSet::image_of(int elem_index) const {
    std::vector<int> img(size());
    for (int p = 0; p < size(); ++p) img[p] = act(elem_index, p);
    return Perm(std::move(img));
}

namespace {

// Orbit decomposition with exact base stabilizers; fills blocks, block_of,
// transporter. Bases are the minimal unvisited points, so the decomposition
// is canonical.
void decompose_into_blocks(GSet& s) {
    const GroupPtr& G = s.group;
    const int n = s.size();
    s.block_of.assign(n, -1);
    s.transporter.assign(n, 0);
    s.blocks.clear();
    for (int base = 0; base < n; ++base) {
        if (s.block_of[base] >= 0) continue;
        int bi = static_cast<int>(s.blocks.size());
        GSetBlock block;
        block.base_point = base;
        std::vector<int> frontier{base};
        s.block_of[base] = bi;
        s.transporter[base] = 0;
        block.points.push_back(base);
        while (!frontier.empty()) {
            int p = frontier.back();
            frontier.pop_back();
            for (size_t gi = 0; gi < s.gen_action.size(); ++gi) {
                int q = s.gen_action[gi][p];
                if (s.block_of[q] >= 0) continue;
                s.block_of[q] = bi;
                s.transporter[q] = G->mul(G->generator_indices()[gi], s.transporter[p]);
                block.points.push_back(q);
                frontier.push_back(q);
            }
        }
        std::sort(block.points.begin(), block.points.end());
        // Exact stabilizer of the base point, by direct sweep.
        std::vector<int> stab_elems;
        for (long e = 0; e < G->order(); ++e)
            if (s.act(static_cast<int>(e), base) == base)
                stab_elems.push_back(static_cast<int>(e));
        std::vector<int> stab_gens(stab_elems.begin(), stab_elems.end());
        block.stabilizer = Subgroup(G, std::move(stab_elems), std::move(stab_gens),
                                    /*validate=*/false);
        s.blocks.push_back(std::move(block));
    }
}

} // namespace

GSet gset_from_stabilizers(const GroupPtr& G, const std::vector<Subgroup>& stabs) {
    for (const Subgroup& H : stabs)
        if (H.parent() != G) throw NotASubgroup("stabilizer belongs to a different group");

    GSet s;
    s.group = G;
    s.gen_action.assign(G->generator_indices().size(), {});

    // Left cosets of each stabilizer in canonical order (sweep by minimal
    // representative); the identity coset leads each block.
    std::vector<std::vector<int>> coset_rep_per_block;   // block -> list of reps
    std::vector<std::vector<int>> coset_index_per_block; // block -> element -> local coset id
    for (const Subgroup& H : stabs) {
        std::vector<int> reps;
        std::vector<int> coset_of(G->order(), -1);
        for (long e = 0; e < G->order(); ++e) {
            if (coset_of[e] >= 0) continue;
            int id = static_cast<int>(reps.size());
            reps.push_back(static_cast<int>(e));
            for (int h : H.elements()) coset_of[G->mul(static_cast<int>(e), h)] = id;
        }
        coset_rep_per_block.push_back(std::move(reps));
        coset_index_per_block.push_back(std::move(coset_of));
    }

    int total = 0;
    std::vector<int> block_start;
    for (const auto& reps : coset_rep_per_block) {
        block_start.push_back(total);
        total += static_cast<int>(reps.size());
    }

    s.block_of.assign(total, 0);
    s.transporter.assign(total, 0);
    s.labels.assign(total, {});
    for (auto& ga : s.gen_action) ga.assign(total, 0);

    for (size_t b = 0; b < stabs.size(); ++b) {
        const auto& reps = coset_rep_per_block[b];
        const auto& coset_of = coset_index_per_block[b];
        for (size_t c = 0; c < reps.size(); ++c) {
            int p = block_start[b] + static_cast<int>(c);
            s.block_of[p] = static_cast<int>(b);
            s.transporter[p] = reps[c];
            std::ostringstream label;
            label << "b" << b << ":" << G->perm(reps[c]).cycle_string();
            s.labels[p] = label.str();
        }
        for (size_t gi = 0; gi < G->generator_indices().size(); ++gi) {
            int g = G->generator_indices()[gi];
            for (size_t c = 0; c < reps.size(); ++c)
                s.gen_action[gi][block_start[b] + static_cast<int>(c)] =
                    block_start[b] + coset_of[G->mul(g, reps[c])];
        }
        GSetBlock block;
        block.stabilizer = stabs[b];
        block.base_point = block_start[b];
        block.points.resize(reps.size());
        std::iota(block.points.begin(), block.points.end(), block_start[b]);
        s.blocks.push_back(std::move(block));
    }
    return s;
}

ClassFunction permutation_character(const GSet& s) {
    const GroupPtr& G = s.group;
    ClassFunction chi{G, std::vector<Cyclotomic>(G->num_classes())};
    for (int c = 0; c < G->num_classes(); ++c) {
        int g = G->class_representative(c);
        long fixed = 0;
        for (int p = 0; p < s.size(); ++p)
            if (s.act(g, p) == p) ++fixed;
        chi.values[c] = Cyclotomic(fixed);
    }
    return chi;
}

bool isomorphic_gsets(const GSet& s, const GSet& t) {
    if (s.group != t.group) throw GroupMismatch("G-sets over different groups");
    std::multiset<std::vector<int>> keys_s, keys_t;
    for (const auto& b : s.blocks) keys_s.insert(subgroup_class_key(b.stabilizer));
    for (const auto& b : t.blocks) keys_t.insert(subgroup_class_key(b.stabilizer));
    return keys_s == keys_t;
}

namespace {

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string tuple_label(const std::vector<int>& t) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
    out << "]";
    return out.str();
}

} // namespace

GSet sn_closure(const GSet& s, int point_cap) {
    const int n = s.size();
    if (n > point_cap)
        throw SizeCapExceeded("closure of " + std::to_string(n) + " points exceeds cap " +
                              std::to_string(point_cap));
    const GroupPtr& G = s.group;

    // Points: bijections [n] -> points(S), i.e. tuples (phi(0),...,phi(n-1)),
    // enumerated in lexicographic order.
    std::vector<int> first(n);
    std::iota(first.begin(), first.end(), 0);
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur = first;
    do {
        tuples.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);

    GSet out;
    out.group = G;
    out.labels.reserve(tuples.size());
    for (const auto& t : tuples) out.labels.push_back(tuple_label(t));

    // Left action: (sigma.phi)(m) = sigma(phi(m)), via S's generator action.
    out.gen_action.assign(G->generator_indices().size(),
                          std::vector<int>(tuples.size(), 0));
    for (size_t gi = 0; gi < G->generator_indices().size(); ++gi)
        for (size_t i = 0; i < tuples.size(); ++i) {
            std::vector<int> img(n);
            for (int m = 0; m < n; ++m) img[m] = s.gen_action[gi][tuples[i][m]];
            out.gen_action[gi][i] = index.at(img);
        }
    out.block_of.assign(tuples.size(), 0);

    // Commuting right S_n-action by precomposition: (phi.rho)(m) = phi(rho(m)).
    std::vector<Perm> sym_gens;
    if (n >= 2) sym_gens.push_back(Perm::parse("(0 1)", n));
    if (n >= 3) {
        std::vector<int> cycle(n);
        for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        sym_gens.push_back(Perm(cycle));
    }
    GroupPtr sym = group_from_generators(n, sym_gens, std::max(factorial(n), 2L));
    GSetRightAction right;
    right.group = sym;
    right.gen_action.assign(sym->generator_indices().size(),
                            std::vector<int>(tuples.size(), 0));
    for (size_t gi = 0; gi < sym->generator_indices().size(); ++gi) {
        const Perm& rho = sym->perm(sym->generator_indices()[gi]);
        for (size_t i = 0; i < tuples.size(); ++i) {
            std::vector<int> img(n);
            for (int m = 0; m < n; ++m) img[m] = tuples[i][rho(m)];
            right.gen_action[gi][i] = index.at(img);
        }
    }
    out.right = std::move(right);

    decompose_into_blocks(out);
    return out;
}

Subgroup right_point_stabilizer(const GSet& closure) {
    if (!closure.right) throw NoRightAction("no recorded right action");
    const GroupPtr& R = closure.right->group;
    std::vector<int> elems;
    for (long e = 0; e < R->order(); ++e)
        if (R->perm(static_cast<int>(e))(0) == 0) elems.push_back(static_cast<int>(e));
    std::vector<int> gens = elems;
    return Subgroup(R, std::move(elems), std::move(gens), /*validate=*/false);
}

GSet quotient_by_right_subgroup(const GSet& s, const Subgroup& b) {
    if (!s.right) throw NoRightAction("this G-set carries no recorded right action");
    if (b.parent() != s.right->group)
        throw NotASubgroup("quotient subgroup must live in the right-acting group");
    const GroupPtr& G = s.group;

    // Right-B-orbits, numbered by minimal member.
    std::vector<int> orbit_of(s.size(), -1);
    std::vector<int> orbit_rep;
    for (int p = 0; p < s.size(); ++p) {
        if (orbit_of[p] >= 0) continue;
        int id = static_cast<int>(orbit_rep.size());
        orbit_rep.push_back(p);
        for (int e : b.elements()) orbit_of[s.act_right(e, p)] = id;
    }

    GSet out;
    out.group = G;
    out.block_of.assign(orbit_rep.size(), 0);
    out.labels.resize(orbit_rep.size());
    for (size_t i = 0; i < orbit_rep.size(); ++i) {
        std::string base = s.labels.empty() ? std::to_string(orbit_rep[i])
                                            : s.labels[orbit_rep[i]];
        out.labels[i] = base + "*B";
    }
    out.gen_action.assign(G->generator_indices().size(),
                          std::vector<int>(orbit_rep.size(), 0));
    for (size_t gi = 0; gi < G->generator_indices().size(); ++gi)
        for (size_t i = 0; i < orbit_rep.size(); ++i)
            out.gen_action[gi][i] = orbit_of[s.gen_action[gi][orbit_rep[i]]];

    decompose_into_blocks(out);
    return out;
}

DiscriminantReport alternating_quotient(const GSet& s, int point_cap) {
    if (s.size() < 2)
        throw SizeCapExceeded("alternating quotient needs at least 2 points");
    GSet closure = sn_closure(s, point_cap);
    const GroupPtr& R = closure.right->group;
    std::vector<int> evens;
    for (long e = 0; e < R->order(); ++e)
        if (R->perm(static_cast<int>(e)).sign() == 1) evens.push_back(static_cast<int>(e));
    std::vector<int> gens = evens;
    Subgroup alt(R, std::move(evens), std::move(gens), /*validate=*/false);
    GSet quot = quotient_by_right_subgroup(closure, alt);
    // Split iff the acting group fixes both points of the quotient.
    for (int gi : s.group->generator_indices())
        for (int p = 0; p < quot.size(); ++p)
            if (quot.act(gi, p) != p) return DiscriminantReport::nonsplit;
    return DiscriminantReport::split;
}

GSet g_closure(const GSet& s, const GroupPtr& C) {
    if (C->degree() != s.size())
        throw NotContaining("C must permute exactly the points of S");
    // C transitive on the points of S?
    {
        std::vector<char> seen(s.size(), 0);
        std::vector<int> frontier{0};
        seen[0] = 1;
        int count = 1;
        while (!frontier.empty()) {
            int p = frontier.back();
            frontier.pop_back();
            for (int gi : C->generator_indices()) {
                int q = C->perm(gi)(p);
                if (!seen[q]) {
                    seen[q] = 1;
                    ++count;
                    frontier.push_back(q);
                }
            }
        }
        if (count != s.size()) throw NotTransitive("C does not act transitively on S");
    }
    const GroupPtr& G = s.group;
    // Image of each generator of G inside C.
    std::vector<int> image_in_c;
    for (int gi : G->generator_indices()) {
        std::vector<int> img(s.size());
        for (int p = 0; p < s.size(); ++p) img[p] = s.act(gi, p);
        Perm pi(std::move(img));
        if (!C->contains(pi))
            throw NotContaining("image of the acting group is not contained in C");
        image_in_c.push_back(C->index_of(pi));
    }

    GSet out;
    out.group = G;
    out.block_of.assign(C->order(), 0);
    out.labels.resize(C->order());
    for (long e = 0; e < C->order(); ++e)
        out.labels[e] = C->perm(static_cast<int>(e)).cycle_string();

    // sigma . c = image(sigma) * c (left composition inside C).
    out.gen_action.assign(G->generator_indices().size(),
                          std::vector<int>(C->order(), 0));
    for (size_t gi = 0; gi < image_in_c.size(); ++gi)
        for (long e = 0; e < C->order(); ++e)
            out.gen_action[gi][e] = C->mul(image_in_c[gi], static_cast<int>(e));

    // Right C-action by right composition: c . r = c * r.
    GSetRightAction right;
    right.group = C;
    right.gen_action.assign(C->generator_indices().size(),
                            std::vector<int>(C->order(), 0));
    for (size_t gi = 0; gi < C->generator_indices().size(); ++gi)
        for (long e = 0; e < C->order(); ++e)
            right.gen_action[gi][e] = C->mul(static_cast<int>(e), C->generator_indices()[gi]);
    out.right = std::move(right);

    decompose_into_blocks(out);
    return out;
}

std::string discriminant_report_name(DiscriminantReport r) {
    return r == DiscriminantReport::split ? "split" : "nonsplit";
}

} // namespace gck
