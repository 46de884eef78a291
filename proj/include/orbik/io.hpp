#pragma once

#include <json.hpp>

#include <string>

#include "orbik/characters.hpp"
#include "orbik/drinfeld.hpp"
#include "orbik/group.hpp"
#include "orbik/inertial_product.hpp"
#include "orbik/product_table.hpp"

namespace orbik {

using json = nlohmann::json;

/// {"type":"permutation","degree":n,"generators":[[[1,2],[3,4]], ...]} with
/// 1-based cycles, or {"type":"cayley","table":[[...], ...]}.
FiniteGroup group_from_json(const json& j);
FiniteGroup group_from_file(const std::string& path);

json classes_json(const Subgroup& group);
/// {"classes": [...], "irreducibles": [[values in cyclotomic syntax], ...]}
json character_table_json(const CharacterTable& table);
json class_function_json(const ClassFunction& phi);

/// Per class: fixed dimensions and the sector characters; per pair orbit:
/// B, E_P, N and D.
json sectors_json(const InertialProduct& engine);

/// {"basis": [...], "constants": [[i, j, k, N], ...]}
json product_table_json(const ProductTable& table);
std::string product_table_text(const ProductTable& table);

json ring_report_json(const RingReport& report);

/// Ring axioms, excess honesty, B = excess identification and the graded
/// Koszul check on every sector.
json check_report_json(const InertialProduct& engine, int molien_degree, bool& all_passed);

}  // namespace orbik
