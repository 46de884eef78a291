#include "orbik/inertia.hpp"

#include <string>

namespace orbik {

GRep GRep::make(const ClassFunction& character) {
  const auto& g = character.group();
  if (g->order() != g->ambient().order()) throw ContractError("representation must be a character of the whole group");
  if (!is_honest(character)) throw ContractError("representation character is not honest");
  return GRep{g, character};
}

GRep GRep::zero(const SubgroupPtr& group) { return GRep{group, ClassFunction::zero(group)}; }

std::vector<Sector> sectors(const SubgroupPtr& g, const GRep& v) {
  std::vector<Sector> out;
  const auto& conj = g->conjugacy();
  for (std::size_t c = 0; c < conj.num_classes(); ++c) {
    const Elem rep = conj.reps[c];
    auto cent = g->subgroup(conj.centralizers[c]);
    const Elem a[] = {rep};
    out.push_back(Sector{static_cast<int>(c), rep, cent, fixed_subspace_character(v.character, a, cent)});
  }
  return out;
}

namespace {

void require_honest(const ClassFunction& phi, const char* name, const PairSector& p) {
  if (!character_table(phi.group()).is_honest(phi)) {
    throw ContractError(std::string("class ") + name + " is not honest on pair sector (" + std::to_string(p.g) + ", " +
                        std::to_string(p.h) + ")");
  }
}

}  // namespace

std::vector<PairSector> pair_sector_data(const SubgroupPtr& g, const GRep& v, const std::vector<Sector>& sectors,
                                         int target_class, const ConjugacyOptions& options) {
  const FiniteGroup& amb = g->ambient();
  const auto& conj = g->conjugacy();
  const Elem k = conj.reps.at(target_class);
  std::vector<PairSector> out;
  int index = 0;
  for (auto& orbit : pair_orbits(amb, conj, k, options)) {
    PairSector p;
    p.target_class = target_class;
    p.orbit_index = index++;
    p.g = orbit.g;
    p.h = orbit.h;
    p.k = k;
    p.class_g = conj.class_of[orbit.g];
    p.class_h = conj.class_of[orbit.h];
    p.orbit_size = orbit.orbit_size;
    p.stabilizer = g->subgroup(std::move(orbit.stabilizer));
    const auto& z = p.stabilizer;

    p.v_on_z = restrict(v.character, z);
    p.vg_on_z = restrict_transport(sectors[p.class_g].fixed_char, conj.transporter[p.g], z);
    p.vh_on_z = restrict_transport(sectors[p.class_h].fixed_char, conj.transporter[p.h], z);
    p.vk_on_z = restrict(sectors[target_class].fixed_char, z);
    const Elem gh[] = {p.g, p.h};
    p.fixed_gh = fixed_subspace_character(v.character, gh, z);

    p.B = p.v_on_z + p.fixed_gh - p.vg_on_z - p.vh_on_z;
    p.E_P = p.v_on_z + p.fixed_gh;
    p.N = p.vk_on_z - p.fixed_gh;

    const Elem just_g[] = {p.g};
    const Elem just_h[] = {p.h};
    p.excess = p.v_on_z - fixed_subspace_character(v.character, just_g, z) -
               fixed_subspace_character(v.character, just_h, z) + p.fixed_gh;

    require_honest(p.B, "B", p);
    require_honest(p.E_P, "E_P", p);
    require_honest(p.N, "N", p);
    out.push_back(std::move(p));
  }
  return out;
}

ClassFunction derived_class_D(const PairSector& pair) { return lambda_minus_one_dual(pair.B); }

ClassFunction pants_class(const PairSector& pair) { return lambda_minus_one_dual(pair.E_P); }

ClassFunction koszul_factor(const PairSector& pair) { return lambda_minus_one_dual(pair.N); }

}  // namespace orbik
