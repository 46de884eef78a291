#pragma once

#include <vector>

#include "orbik/characters.hpp"
#include "orbik/product_table.hpp"

namespace orbik {

/// A simple module ([a], sigma) of the Drinfeld double: a conjugacy class
/// and an irreducible of C(a).
struct DoubleSimple {
  int class_index;
  Elem rep;
  int irrep;
  long dimension;  // |[a]| * sigma(1)
};

/// Values on the commuting pairs (a, x), x in C(a), in the pair order of the
/// owning DrinfeldDouble.
struct DoubleCharacter {
  std::vector<Cyclotomic> values;
};

/*
  The fusion ring of D(k[G]) computed from conjugation-equivariant vector
  bundles on G.  A module is a G-graded space V = sum_b V_b with
  x V_b = V_{x b x^-1}; its character is the function (a, x) -> tr(x | V_a)
  on commuting pairs, and (V (x) W)_a = sum_{b c = a} V_b (x) W_c.
  Multiplicities come from the pair inner product
  <phi, psi> = (1/|G|) sum over commuting (a, x) of phi(a, x) conj(psi(a, x)).
*/
class DrinfeldDouble {
 public:
  /// The seed only changes the transversal used to build the simples.
  explicit DrinfeldDouble(GroupPtr group, const ConjugacyOptions& options = {});

  const std::vector<DoubleSimple>& simples() const { return simples_; }
  std::size_t num_commuting_pairs() const { return pair_a_.size(); }
  /// Index of the commuting pair (a, x), or -1.
  long pair_index(Elem a, Elem x) const;

  DoubleCharacter character(std::size_t simple) const;
  Cyclotomic pair_inner_product(const DoubleCharacter& a, const DoubleCharacter& b) const;
  DoubleCharacter tensor(const DoubleCharacter& a, const DoubleCharacter& b) const;

  /// N_ij^k = <chi_i chi_j, chi_k>; every constant must be a nonnegative
  /// integer.
  ProductTable fusion_constants() const;

 private:
  GroupPtr group_;
  SubgroupPtr whole_;
  std::vector<Elem> transversal_;  // t with t rep t^-1 = b, per element b
  std::vector<std::vector<Elem>> centralizer_of_;  // sorted C(a) for each a
  std::vector<std::size_t> offset_;                // first pair index of a
  std::vector<Elem> pair_a_, pair_x_;
  std::vector<DoubleSimple> simples_;
  std::vector<CharacterTable> tables_;
  std::vector<DoubleCharacter> characters_;
};

}  // namespace orbik
