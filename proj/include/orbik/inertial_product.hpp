#pragma once

#include <functional>
#include <vector>

#include "orbik/characters.hpp"
#include "orbik/inertia.hpp"
#include "orbik/product_table.hpp"

namespace orbik {

/// A class in K_G(I_G V): one virtual character of C(g) per class [g].
struct InertiaClass {
  std::vector<ClassFunction> components;

  InertiaClass& operator+=(const InertiaClass& other);
  friend InertiaClass operator+(InertiaClass a, const InertiaClass& b) { return a += b; }
  friend bool operator==(const InertiaClass& a, const InertiaClass& b) { return a.components == b.components; }
  bool is_zero() const;
};

/// Multiplier attached to each pair sector by an inertial product.
using RFactor = std::function<ClassFunction(const PairSector&)>;

/*
  Inertial products on K_G(I_G V) for a linear representation V of G.

  Representation-ring coordinates identify K_{C(g)}(V^g) with R(C(g)).
  Pullback along the inclusions of V^<g,h> is restriction, and the
  pushforward along V^<g,h> -> V^k acquires the Koszul factor
  lambda_{-1}(N^dual) before inducing from Z(g,h) to C(k):

    (x * y)_k = sum over C(k)-orbits (g, h), gh = k, of
                Ind_Z^{C(k)} [ x_g|_Z . y_h|_Z . R(g, h) . lambda_{-1}(N^dual) ]

  where x_g|_Z is the component of x at [g] transported to g by the stored
  transporter.  The virtual product takes R = lambda_{-1}(B^dual).
*/
class InertialProduct {
 public:
  /// chi_v is a character of G, given on any whole-group subgroup object;
  /// its class-indexed values are reused.
  InertialProduct(GroupPtr group, const ClassFunction& chi_v, const ConjugacyOptions& options = {});

  const SubgroupPtr& group() const { return whole_; }
  const GRep& representation() const { return v_; }
  const std::vector<Sector>& sectors() const { return sectors_; }
  const std::vector<PairSector>& pair_sectors(int target_class) const { return pairs_.at(target_class); }
  const CharacterTable& centralizer_table(int class_index) const { return tables_.at(class_index); }
  const std::vector<BasisElement>& basis() const { return basis_; }

  InertiaClass zero() const;
  InertiaClass unit() const;
  InertiaClass basis_element(std::size_t i) const;
  /// Integer coordinates of x in the basis; throws when x is not integral.
  std::vector<long> coordinates(const InertiaClass& x) const;

  InertiaClass generic_product(const InertiaClass& x, const InertiaClass& y, const RFactor& r) const;
  InertiaClass virtual_product(const InertiaClass& x, const InertiaClass& y) const;

  ProductTable product_table() const;
  /// The product table relabelled by the canonical basis: class
  /// representatives are the smallest class elements and irreducibles are
  /// numbered in the tables of their centralizers.  Equal for every seed.
  ProductTable canonical_product_table() const;

  /// Transport along g -> g^-1.
  InertiaClass involution(const InertiaClass& x) const;

  RingReport ring_property_check() const { return orbik::ring_property_check(product_table()); }

 private:
  void require_shape(const InertiaClass& x) const;

  SubgroupPtr whole_;
  GRep v_;
  ConjugacyOptions options_;
  std::vector<Sector> sectors_;
  std::vector<std::vector<PairSector>> pairs_;
  std::vector<std::vector<ClassFunction>> koszul_;
  std::vector<std::vector<ClassFunction>> derived_;
  std::vector<CharacterTable> tables_;
  std::vector<BasisElement> basis_;
};

}  // namespace orbik
