#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orbik/characters.hpp"
#include "orbik/group.hpp"

namespace orbik {

FiniteGroup cyclic_group(int n);
/// Symmetries of the regular n-gon, order 2n; element r^i s^j has index i + n j.
FiniteGroup dihedral_group(int n);
/// Generated by (1 2) and (1 2 ... n) on n points, n <= 5.
FiniteGroup symmetric_group(int n);
/// Elements ordered 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();

/// Builtin names: "trivial", "cyclic:n", "dihedral:n", "symmetric:n",
/// "quaternion8", and the short forms "Zn", "Dn", "Sn", "Q8".
FiniteGroup builtin_group(std::string_view name);

/// Resolves one representation spec against the group's own character
/// table: "zero", "trivial", "regular", "sign", "standard", "permutation",
/// "irrep:i", or "chars:v1,v2,..." with one cyclotomic value per class.
ClassFunction representation_from_spec(const SubgroupPtr& group, std::string_view spec);

/// Direct sum of the given specs; an empty list is the zero representation.
ClassFunction representation_from_specs(const SubgroupPtr& group, const std::vector<std::string>& specs);

}  // namespace orbik
