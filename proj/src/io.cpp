#include "orbik/io.hpp"

#include <fstream>
#include <sstream>

namespace orbik {

FiniteGroup group_from_json(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "permutation") {
      const int degree = j.at("degree").get<int>();
      auto gens = j.at("generators").get<std::vector<std::vector<std::vector<int>>>>();
      return FiniteGroup::from_cycles(degree, gens);
    }
    if (type == "cayley") {
      return FiniteGroup::from_cayley(j.at("table").get<std::vector<std::vector<int>>>());
    }
    throw ParseError("unknown group type '" + type + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed group description: ") + e.what());
  }
}

FiniteGroup group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("group file " + path + " is not valid JSON: " + e.what());
  }
  return group_from_json(j);
}

json class_function_json(const ClassFunction& phi) {
  json out = json::array();
  for (const auto& v : phi.values()) out.push_back(v.str());
  return out;
}

json classes_json(const Subgroup& group) {
  json out = json::array();
  for (std::size_t c = 0; c < group.num_classes(); ++c) {
    const Elem r = group.rep(static_cast<int>(c));
    out.push_back({{"rep", r}, {"size", group.class_size(static_cast<int>(c))}, {"order", group.ambient().elem_order(r)}});
  }
  return out;
}

json character_table_json(const CharacterTable& table) {
  json rows = json::array();
  for (const auto& chi : table.irreducibles()) rows.push_back(class_function_json(chi));
  return {{"group_order", table.group()->order()}, {"classes", classes_json(*table.group())}, {"irreducibles", rows}};
}

json sectors_json(const InertialProduct& engine) {
  json out;
  out["group_order"] = engine.group()->order();
  out["representation"] = class_function_json(engine.representation().character);
  out["dimension"] = engine.representation().dimension();
  json secs = json::array();
  for (const auto& s : engine.sectors()) {
    secs.push_back({{"class", s.class_index},
                    {"rep", s.rep},
                    {"centralizer_order", s.centralizer->order()},
                    {"fixed_dimension", s.fixed_dimension()},
                    {"fixed_character", class_function_json(s.fixed_char)}});
  }
  out["sectors"] = secs;
  json pairs = json::array();
  for (std::size_t k = 0; k < engine.sectors().size(); ++k) {
    for (const auto& p : engine.pair_sectors(static_cast<int>(k))) {
      pairs.push_back({{"target_class", p.target_class},
                       {"g", p.g},
                       {"h", p.h},
                       {"k", p.k},
                       {"orbit_size", p.orbit_size},
                       {"stabilizer_order", p.stabilizer->order()},
                       {"fixed_gh_dimension", *p.fixed_gh.degree().as_long()},
                       {"B", class_function_json(p.B)},
                       {"E_P", class_function_json(p.E_P)},
                       {"N", class_function_json(p.N)},
                       {"D", class_function_json(derived_class_D(p))}});
    }
  }
  out["pair_sectors"] = pairs;
  return out;
}

json product_table_json(const ProductTable& table) {
  json basis = json::array();
  for (const auto& b : table.basis) {
    basis.push_back({{"class", b.class_index}, {"rep", b.rep}, {"irrep", b.irrep}, {"degree", b.degree}});
  }
  json constants = json::array();
  for (const auto& e : table.sparse()) constants.push_back(e);
  return {{"basis", basis}, {"constants", constants}};
}

std::string product_table_text(const ProductTable& table) {
  std::ostringstream os;
  const std::size_t n = table.size();
  os << n << " basis elements\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = table.basis[i];
    os << "  e" << i << " = ([" << b.rep << "], irrep " << b.irrep << ", degree " << b.degree << ")\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      os << "e" << i << " * e" << j << " =";
      bool first = true;
      for (std::size_t k = 0; k < n; ++k) {
        const long v = table.at(i, j, k);
        if (v == 0) continue;
        os << (first ? " " : (v < 0 ? " - " : " + "));
        if (first && v < 0) os << "-";
        const long a = v < 0 ? -v : v;
        if (a != 1) os << a << "*";
        os << "e" << k;
        first = false;
      }
      if (first) os << " 0";
      os << "\n";
    }
  }
  return os.str();
}

json ring_report_json(const RingReport& report) {
  return {{"unit", report.unit},
          {"commutative", report.commutative},
          {"associative", report.associative},
          {"passed", report.passed()},
          {"counterexample", report.first_counterexample}};
}

json check_report_json(const InertialProduct& engine, int molien_degree, bool& all_passed) {
  json out;
  const RingReport ring = engine.ring_property_check();
  out["ring"] = ring_report_json(ring);

  std::size_t pairs = 0, honest = 0, identified = 0;
  for (std::size_t k = 0; k < engine.sectors().size(); ++k) {
    for (const auto& p : engine.pair_sectors(static_cast<int>(k))) {
      ++pairs;
      const auto table = character_table(p.stabilizer);
      if (table.is_honest(p.B) && table.is_honest(p.E_P) && table.is_honest(p.N)) ++honest;
      if (p.B == p.excess) ++identified;
    }
  }
  out["honesty"] = {{"pair_sectors", pairs}, {"honest", honest}, {"passed", honest == pairs}};
  out["excess_identification"] = {{"pair_sectors", pairs}, {"equal", identified}, {"passed", identified == pairs}};

  std::size_t molien_ok = 0;
  for (const auto& s : engine.sectors()) {
    if (molien_check(engine.representation().character, s.rep, s.centralizer, molien_degree)) ++molien_ok;
  }
  out["molien"] = {{"degree", molien_degree},
                   {"sectors", engine.sectors().size()},
                   {"true", molien_ok},
                   {"passed", molien_ok == engine.sectors().size()}};
  all_passed = ring.passed() && honest == pairs && identified == pairs && molien_ok == engine.sectors().size();
  out["passed"] = all_passed;
  return out;
}

}  // namespace orbik
