#pragma once

#include <vector>

#include "orbik/characters.hpp"
#include "orbik/group.hpp"

namespace orbik {

/// A linear representation V of G, given by its (honest) character on the
/// whole group.
struct GRep {
  SubgroupPtr group;
  ClassFunction character;

  static GRep make(const ClassFunction& character);
  static GRep zero(const SubgroupPtr& group);
  long dimension() const { return *character.degree().as_long(); }
};

/// The component X^g of the inertia for one conjugacy class.
struct Sector {
  int class_index;
  Elem rep;
  SubgroupPtr centralizer;
  ClassFunction fixed_char;  // V^g as a C(g)-representation

  long fixed_dimension() const { return *fixed_char.degree().as_long(); }
};

/*
  One C(k)-orbit of the double inertia over the target k = g h, in
  representation-ring coordinates on the stabilizer Z = C(g) cap C(h).

    B     = V|Z + V^<g,h> - (q1^* V^g) - (q2^* V^h)   (virtual class)
    E_P   = V|Z + V^<g,h>                            (pants excess class)
    N     = V^k|Z - V^<g,h>                           (normal of V^<g,h> in V^k)

  q1^* and q2^* pull the sector characters of [g] and [h] back along the
  stored transporters.  excess is the excess bundle of V^g and V^h inside
  V, computed from fixed-space projectors on Z directly.
*/
struct PairSector {
  int target_class;
  int orbit_index;
  Elem g, h, k;
  int class_g, class_h;
  std::size_t orbit_size;
  SubgroupPtr stabilizer;

  ClassFunction v_on_z;
  ClassFunction vg_on_z;  // transported sector character of [g]
  ClassFunction vh_on_z;
  ClassFunction vk_on_z;
  ClassFunction fixed_gh;
  ClassFunction B;
  ClassFunction E_P;
  ClassFunction N;
  ClassFunction excess;  // V - V^g - V^h + V^<g,h> via projectors
};

/// Sector components of [V/G]: one per class, in class order.
std::vector<Sector> sectors(const SubgroupPtr& g, const GRep& v);

/// Pair sectors over the target class rep k (class index target_class of g).
/// Every excess class is checked for honesty.
std::vector<PairSector> pair_sector_data(const SubgroupPtr& g, const GRep& v, const std::vector<Sector>& sectors,
                                         int target_class, const ConjugacyOptions& options = {});

/// lambda_{-1}(B^dual): the derived structure-sheaf class of the double inertia.
ClassFunction derived_class_D(const PairSector& pair);

/// lambda_{-1}(E_P^dual).
ClassFunction pants_class(const PairSector& pair);

/// lambda_{-1}(N^dual), acquired by pushing forward along V^<g,h> -> V^k.
ClassFunction koszul_factor(const PairSector& pair);

}  // namespace orbik
