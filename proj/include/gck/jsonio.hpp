#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gck/brauer.hpp"
#include "gck/classfun.hpp"
#include "gck/descent.hpp"
#include "gck/gset.hpp"
#include "gck/isogeny.hpp"
#include "gck/permmod.hpp"
#include "gck/rh.hpp"
#include "gck/sha_parity.hpp"

namespace gck {

using Json = nlohmann::json;

// Strict-mode guard: rejects keys outside `allowed` (typos in mathematical
// input should fail loudly, not be ignored).
void require_keys(const Json& obj, const std::vector<std::string>& allowed,
                  const std::string& where);

// ----- parsing ---------------------------------------------------------

// {"degree": n, "generators": ["(0 1 2)", ...]} or a named group: "S3", "A4",
// "C6", "D4" (dihedral of order 8), "V4", "Q8".
GroupPtr group_from_json(const Json& j, long order_cap = kDefaultOrderCap);
GroupPtr group_from_name(const std::string& name, long order_cap = kDefaultOrderCap);

// Array of generator strings, e.g. ["(0 1)", "(2 3)"].
Subgroup subgroup_from_json(const GroupPtr& G, const Json& j);

// {"stabilizers": [[...], ...]} -> disjoint union of coset spaces.
GSet gset_from_json(const GroupPtr& G, const Json& j);

CoverData cover_from_json(const GroupPtr& G, const Json& j);

// {"domain": [[gens]...], "codomain": [[gens]...], "matrix": [[...]]} or with
// "double_coset_coefficients": [[[c per basis hom]]] indexed [i][j].
PermModuleHom hom_from_json(const GroupPtr& G, const Json& j);

std::vector<RankObservation> observations_from_json(const GroupPtr& G, const Json& j);

std::vector<LocalDeficiencyData> deficiency_from_json(const Json& j);

// ----- serialization ---------------------------------------------------

Json json_of(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const Json& j);

Json json_of(const ClassFunction& f);
Json json_of_table(const CharacterTable& table);
CharacterTablePtr table_from_json(const GroupPtr& G, const Json& j);

Json json_of(const VirtualCharacter& v);
Json json_of_gset(const GSet& s);
Json json_of_hom(const PermModuleHom& phi);
Json json_of_expression(const IsogenyExpression& e);
Json json_of_solution(const MultiplicitySolution& sol);
Json json_of_relation(const BrauerRelation& rel);

} // namespace gck
