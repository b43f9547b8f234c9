#include "gck/jsonio.hpp"

#include <algorithm>

#include "gck/errors.hpp"

namespace gck {

void require_keys(const Json& obj, const std::vector<std::string>& allowed,
                  const std::string& where) {
    if (!obj.is_object()) throw ConfigParse(where + ": expected a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw ConfigParse(where + ": unknown field '" + it.key() + "'");
    }
}

GroupPtr group_from_name(const std::string& name, long order_cap) {
    auto cyclic = [&](int n) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
        return group_from_generators(n, {Perm(img)}, order_cap);
    };
    auto symmetric = [&](int n) {
        std::vector<Perm> gens;
        if (n >= 2) gens.push_back(Perm::parse("(0 1)", n));
        if (n >= 3) {
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
            gens.push_back(Perm(img));
        }
        return group_from_generators(n, gens, order_cap);
    };
    auto alternating = [&](int n) {
        std::vector<Perm> gens;
        if (n >= 3) gens.push_back(Perm::parse("(0 1 2)", n));
        for (int i = 3; i + 1 < n + 1 && i < n; ++i)
            gens.push_back(Perm::parse("(0 1)(" + std::to_string(i - 1) + " " +
                                           std::to_string(i) + ")",
                                       n));
        return group_from_generators(n, gens, order_cap);
    };
    auto dihedral = [&](int n) { // order 2n, acting on n points
        std::vector<int> rot(n);
        for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
        std::vector<int> flip(n);
        for (int i = 0; i < n; ++i) flip[i] = (n - i) % n;
        return group_from_generators(n, {Perm(rot), Perm(flip)}, order_cap);
    };
    if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'A' || name[0] == 'C' || name[0] == 'D')) {
        bool digits = true;
        for (size_t i = 1; i < name.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
        if (digits) {
            int n = std::stoi(name.substr(1));
            if (n >= 1) {
                switch (name[0]) {
                    case 'S': return symmetric(std::max(n, 1));
                    case 'A': return alternating(std::max(n, 3));
                    case 'C': return cyclic(n);
                    case 'D': return dihedral(std::max(n, 3));
                }
            }
        }
    }
    if (name == "V4")
        return group_from_generators(4, {Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)},
                                     order_cap);
    if (name == "Q8")
        return group_from_generators(
            8, {Perm::parse("(0 1 2 3)(4 5 6 7)", 8), Perm::parse("(0 4 2 6)(1 7 3 5)", 8)},
            order_cap);
    throw ConfigParse("unknown group name '" + name + "'");
}

GroupPtr group_from_json(const Json& j, long order_cap) {
    if (j.is_string()) return group_from_name(j.get<std::string>(), order_cap);
    require_keys(j, {"degree", "generators"}, "group");
    if (!j.contains("degree") || !j.contains("generators"))
        throw ConfigParse("group: need 'degree' and 'generators'");
    int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& s : j.at("generators"))
        gens.push_back(Perm::parse(s.get<std::string>(), degree));
    return group_from_generators(degree, gens, order_cap);
}

Subgroup subgroup_from_json(const GroupPtr& G, const Json& j) {
    if (!j.is_array()) throw ConfigParse("subgroup: expected an array of generator strings");
    std::vector<Perm> gens;
    for (const auto& s : j) gens.push_back(Perm::parse(s.get<std::string>(), G->degree()));
    return subgroup_generated(G, gens);
}

GSet gset_from_json(const GroupPtr& G, const Json& j) {
    require_keys(j, {"stabilizers"}, "gset");
    std::vector<Subgroup> stabs;
    for (const auto& st : j.at("stabilizers")) stabs.push_back(subgroup_from_json(G, st));
    return gset_from_stabilizers(G, stabs);
}

CoverData cover_from_json(const GroupPtr& G, const Json& j) {
    require_keys(j, {"component_stabilizer", "base_genus", "branch_stabilizers"}, "cover");
    CoverData c;
    c.group = G;
    c.component_stabilizer = subgroup_from_json(G, j.at("component_stabilizer"));
    c.base_genus = j.at("base_genus").get<long>();
    for (const auto& b : j.at("branch_stabilizers"))
        c.branch_stabilizers.push_back(subgroup_from_json(G, b));
    return c;
}

PermModuleHom hom_from_json(const GroupPtr& G, const Json& j) {
    require_keys(j, {"domain", "codomain", "matrix", "double_coset_coefficients"}, "hom");
    std::vector<Subgroup> dom_stabs, cod_stabs;
    for (const auto& st : j.at("domain")) dom_stabs.push_back(subgroup_from_json(G, st));
    for (const auto& st : j.at("codomain")) cod_stabs.push_back(subgroup_from_json(G, st));
    auto dom = std::make_shared<const GSet>(gset_from_stabilizers(G, dom_stabs));
    auto cod = std::make_shared<const GSet>(gset_from_stabilizers(G, cod_stabs));

    if (j.contains("matrix")) {
        const Json& rows = j.at("matrix");
        Matrix<Int> m(cod->size(), dom->size());
        if (static_cast<int>(rows.size()) != cod->size())
            throw ConfigParse("hom.matrix: expected " + std::to_string(cod->size()) + " rows");
        for (int r = 0; r < cod->size(); ++r) {
            if (static_cast<int>(rows[r].size()) != dom->size())
                throw ConfigParse("hom.matrix: bad row length");
            for (int c = 0; c < dom->size(); ++c)
                m.at(r, c) = Int(rows[r][c].get<long>());
        }
        return hom_from_matrix(dom, cod, std::move(m));
    }
    if (!j.contains("double_coset_coefficients"))
        throw ConfigParse("hom: need 'matrix' or 'double_coset_coefficients'");

    // coefficients[i][j][k]: coordinate against hom_basis(G, H_i, H'_j)[k],
    // assembled into the full matrix block by block.
    const Json& coeff = j.at("double_coset_coefficients");
    Matrix<Int> m(cod->size(), dom->size());
    if (coeff.size() != dom_stabs.size()) throw ConfigParse("coefficients: one entry per domain block");
    for (size_t i = 0; i < dom_stabs.size(); ++i) {
        if (coeff[i].size() != cod_stabs.size())
            throw ConfigParse("coefficients: one entry per codomain block");
        for (size_t jj = 0; jj < cod_stabs.size(); ++jj) {
            std::vector<PermModuleHom> basis = hom_basis(G, dom_stabs[i], cod_stabs[jj]);
            if (coeff[i][jj].size() != basis.size())
                throw ConfigParse("coefficients: expected " + std::to_string(basis.size()) +
                                  " coordinates for block (" + std::to_string(i) + "," +
                                  std::to_string(jj) + ")");
            for (size_t kk = 0; kk < basis.size(); ++kk) {
                Int c(coeff[i][jj][kk].get<long>());
                if (c == 0) continue;
                // Copy the basis block into the big matrix at the block offsets.
                const auto& bm = basis[kk].matrix;
                int roff = cod->blocks[jj].base_point;
                int coff = dom->blocks[i].base_point;
                for (int r = 0; r < bm.rows(); ++r)
                    for (int cc = 0; cc < bm.cols(); ++cc)
                        m.at(roff + r, coff + cc) += c * bm.at(r, cc);
            }
        }
    }
    return hom_from_matrix(dom, cod, std::move(m));
}

std::vector<RankObservation> observations_from_json(const GroupPtr& G, const Json& j) {
    std::vector<RankObservation> obs;
    for (const auto& o : j) {
        require_keys(o, {"subgroup", "kind", "rank", "prime"}, "observation");
        RankObservation r;
        r.subgroup = subgroup_from_json(G, o.at("subgroup"));
        std::string kind = o.at("kind").get<std::string>();
        if (kind == "mordell_weil") r.kind = RankKind::mordell_weil;
        else if (kind == "p_selmer") r.kind = RankKind::p_selmer;
        else throw ConfigParse("observation.kind must be mordell_weil or p_selmer");
        const Json& rank = o.at("rank");
        if (rank.is_number_integer()) r.rank = LinExpr::value(Rat(rank.get<long>()));
        else if (rank.is_string()) r.rank = LinExpr::symbol(rank.get<std::string>());
        else throw ConfigParse("observation.rank must be an integer or a symbol name");
        if (o.contains("prime")) r.prime = o.at("prime").get<long>();
        obs.push_back(std::move(r));
    }
    return obs;
}

std::vector<LocalDeficiencyData> deficiency_from_json(const Json& j) {
    std::vector<LocalDeficiencyData> places;
    for (const auto& pj : j) {
        require_keys(pj, {"place", "components"}, "place");
        LocalDeficiencyData d;
        d.place = pj.at("place").get<std::string>();
        for (const auto& cj : pj.at("components")) {
            require_keys(cj, {"label", "places_above"}, "component");
            ComponentDeficiency comp;
            comp.label = cj.at("label").get<std::string>();
            for (const auto& wj : cj.at("places_above")) {
                require_keys(wj, {"label", "deficient"}, "place_above");
                comp.places_above.push_back(
                    PlaceAbove{wj.at("label").get<std::string>(), wj.at("deficient").get<bool>()});
            }
            d.components.push_back(std::move(comp));
        }
        places.push_back(std::move(d));
    }
    return places;
}

Json json_of(const Cyclotomic& v) {
    Json coeffs = Json::array();
    for (const Rat& c : v.coefficients()) coeffs.push_back(to_string(c));
    return Json{{"conductor", v.conductor()}, {"coefficients", coeffs}};
}

namespace {
Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ConfigParse("bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}
} // namespace

Cyclotomic cyclotomic_from_json(const Json& j) {
    require_keys(j, {"conductor", "coefficients"}, "cyclotomic");
    long m = j.at("conductor").get<long>();
    Cyclotomic out;
    for (size_t i = 0; i < j.at("coefficients").size(); ++i) {
        Rat c = rat_from_string(j.at("coefficients")[i].get<std::string>());
        if (c != 0) out += Cyclotomic::zeta(m, static_cast<long>(i)) * Cyclotomic(c);
    }
    return out;
}

Json json_of(const ClassFunction& f) {
    Json values = Json::array();
    for (const auto& v : f.values) values.push_back(json_of(v));
    return Json{{"values", values}};
}

Json json_of_table(const CharacterTable& table) {
    Json irr = Json::array();
    for (int i = 0; i < table.size(); ++i) irr.push_back(json_of(table.irreducible(i)));
    return Json{{"group_hash", table.group()->canonical_hash()},
                {"num_classes", table.group()->num_classes()},
                {"irreducibles", irr}};
}

CharacterTablePtr table_from_json(const GroupPtr& G, const Json& j) {
    require_keys(j, {"group_hash", "num_classes", "irreducibles"}, "character_table");
    if (j.at("group_hash").get<std::string>() != G->canonical_hash())
        throw CacheCorrupt("cached table belongs to a different group");
    if (j.at("num_classes").get<int>() != G->num_classes())
        throw CacheCorrupt("cached table has the wrong class count");
    std::vector<ClassFunction> irr;
    for (const auto& cj : j.at("irreducibles")) {
        require_keys(cj, {"values"}, "irreducible");
        ClassFunction f{G, {}};
        for (const auto& vj : cj.at("values")) f.values.push_back(cyclotomic_from_json(vj));
        if (static_cast<int>(f.values.size()) != G->num_classes())
            throw CacheCorrupt("cached irreducible has the wrong length");
        irr.push_back(std::move(f));
    }
    try {
        // Orthonormality spot test and ordering check happen in here.
        return CharacterTable::from_irreducibles(G, std::move(irr));
    } catch (const Error& e) {
        throw CacheCorrupt(std::string("cached table fails validation: ") + e.what());
    }
}

Json json_of(const VirtualCharacter& v) {
    Json mult = Json::array();
    for (const Int& m : v.multiplicities) mult.push_back(to_string(m));
    return Json{{"multiplicities", mult}};
}

Json json_of_gset(const GSet& s) {
    Json blocks = Json::array();
    for (const auto& b : s.blocks) {
        Json gens = Json::array();
        for (int g : b.stabilizer.generators())
            gens.push_back(s.group->perm(g).cycle_string());
        blocks.push_back(Json{{"stabilizer", gens}, {"size", b.points.size()}});
    }
    return Json{{"points", s.size()}, {"blocks", blocks}};
}

Json json_of_hom(const PermModuleHom& phi) {
    auto stab_list = [](const GSet& s) {
        Json out = Json::array();
        for (const auto& b : s.blocks) {
            Json gens = Json::array();
            for (int g : b.stabilizer.generators())
                gens.push_back(s.group->perm(g).cycle_string());
            out.push_back(gens);
        }
        return out;
    };
    Json rows = Json::array();
    for (int r = 0; r < phi.matrix.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < phi.matrix.cols(); ++c)
            row.push_back(phi.matrix.at(r, c).get_si());
        rows.push_back(row);
    }
    return Json{{"domain", stab_list(*phi.domain)},
                {"codomain", stab_list(*phi.codomain)},
                {"matrix", rows}};
}

Json json_of_expression(const IsogenyExpression& e) {
    Json blocks = Json::array();
    for (int i = 0; i < e.target_blocks; ++i)
        for (int j = 0; j < e.source_blocks; ++j) {
            const ExpressionBlock& b = e.block(i, j);
            Json terms = Json::object();
            for (const auto& [t, c] : b.terms)
                terms[e.group->perm(t).cycle_string()] = to_string(c);
            blocks.push_back(Json{{"target", i},
                                  {"source", j},
                                  {"prefactor",
                                   Json{{"num", to_string(b.prefactor.get_num())},
                                        {"den", to_string(b.prefactor.get_den())}}},
                                  {"identity", to_string(b.identity_coefficient)},
                                  {"terms", terms}});
        }
    return Json{{"blocks", blocks}};
}

Json json_of_solution(const MultiplicitySolution& sol) {
    Json mult = Json::object();
    for (int i = 0; i < sol.table->size(); ++i)
        mult[irreducible_name(*sol.table, i)] = sol.multiplicities[i].str();
    std::string status =
        sol.status == MultiplicitySolution::Status::determined      ? "determined"
        : sol.status == MultiplicitySolution::Status::underdetermined ? "underdetermined"
                                                                      : "inconsistent";
    Json out{{"status", status}, {"multiplicities", mult}};
    if (!sol.witness.empty()) out["witness"] = sol.witness;
    if (!sol.free_irreducibles.empty()) {
        Json fr = Json::array();
        for (int i : sol.free_irreducibles) fr.push_back(irreducible_name(*sol.table, i));
        out["free"] = fr;
    }
    return out;
}

Json json_of_relation(const BrauerRelation& rel) {
    auto side = [&](const std::vector<Subgroup>& stabs) {
        Json out = Json::array();
        for (const Subgroup& H : stabs) {
            Json gens = Json::array();
            for (int g : H.generators())
                gens.push_back(H.parent()->perm(g).cycle_string());
            out.push_back(Json{{"order", H.order()}, {"generators", gens}});
        }
        return out;
    };
    Json values = Json::array();
    for (const auto& v : rel.character.values) values.push_back(v.str());
    return Json{{"left", side(rel.left_stabilizers)},
                {"right", side(rel.right_stabilizers)},
                {"character", values}};
}

} // namespace gck
