#pragma once

#include <span>
#include <vector>

#include "orbik/cyclotomic.hpp"
#include "orbik/group.hpp"

namespace orbik {

/// Irreducible character values of a subgroup, rows in table order.
struct TableData {
  std::vector<std::vector<Cyclotomic>> rows;
  std::size_t prime = 0;  // modulus used by the Dixon computation
};

/*
  An exact class function on a subgroup: one cyclotomic value per conjugacy
  class of that subgroup, in class order.  Sums and pointwise products are
  the ring operations of the representation ring R(H) (tensored with the
  value field).
*/
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(SubgroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction zero(SubgroupPtr group);
  static ClassFunction constant(SubgroupPtr group, const Cyclotomic& c);
  static ClassFunction trivial(SubgroupPtr group) { return constant(std::move(group), Cyclotomic(1L)); }

  const SubgroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  /// Value at an element of the subgroup.
  const Cyclotomic& at(Elem x) const;
  const Cyclotomic& degree() const { return values_.front(); }
  bool is_zero() const;

  ClassFunction dual() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const ClassFunction& other);
  ClassFunction& operator*=(const Cyclotomic& scalar);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }
  ClassFunction operator-() const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  void require_same_group(const ClassFunction& other, const char* op) const;

  SubgroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// Irreducible characters of a subgroup, ordered by degree and then
/// lexicographically on values (canonical_compare per class).
class CharacterTable {
 public:
  static CharacterTable of(SubgroupPtr group);

  const SubgroupPtr& group() const { return group_; }
  std::size_t size() const { return irreducibles_.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles_[i]; }
  const std::vector<ClassFunction>& irreducibles() const& { return irreducibles_; }
  // By value on temporaries, so range-for over character_table(h).irreducibles() is safe.
  std::vector<ClassFunction> irreducibles() && { return std::move(irreducibles_); }
  std::vector<std::size_t> class_sizes() const;
  std::vector<int> element_orders() const;

  /// Multiplicities <phi, chi_i>.
  std::vector<Cyclotomic> decompose(const ClassFunction& phi) const;
  /// Integer multiplicities; throws ContractError when one is not an integer.
  std::vector<long> decompose_integral(const ClassFunction& phi) const;
  bool is_honest(const ClassFunction& phi) const;
  /// Index of an irreducible equal to phi, or -1.
  int find(const ClassFunction& phi) const;

 private:
  SubgroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
};

/// Dixon's modular method: simultaneous eigenvectors of the class matrices
/// modulo a prime p = 1 (mod exponent), lifted to cyclotomic values.
TableData dixon_character_table(const Subgroup& h);

CharacterTable character_table(const SubgroupPtr& h);

/// (1/|H|) sum_h phi(h) conj(psi(h)).
Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi);

/// Induction from phi's group to the supergroup g.
ClassFunction induce(const ClassFunction& phi, const SubgroupPtr& g);

/// Value at z in target is phi(t^-1 z t): transport along conjugation by t,
/// then restrict.  Requires t^-1 target t to lie in phi's group.
ClassFunction restrict_transport(const ClassFunction& phi, Elem t, const SubgroupPtr& target);
ClassFunction restrict(const ClassFunction& phi, const SubgroupPtr& target);

/// psi^k: value at h is phi(h^k).
ClassFunction adams(const ClassFunction& phi, long k);

/// lambda^i via Newton's identities from the Adams power sums.  phi must
/// be honest.
ClassFunction exterior_power(const ClassFunction& phi, int i);

/// sum_i (-1)^i lambda^i(phi^dual); pointwise det(1 - rho(h^-1)).
ClassFunction lambda_minus_one_dual(const ClassFunction& phi);

/// Character of the fixed space V^<A> as a representation of z, which must
/// centralize A.  chi_v must be defined on a group containing z and A.
ClassFunction fixed_subspace_character(const ClassFunction& chi_v, std::span<const Elem> a, const SubgroupPtr& z);

/// Checks lambda_{-t}((V/V^g)^dual) * Hilb_t(Sym V^dual) = Hilb_t(Sym (V^g)^dual)
/// classwise on z, up to t^degree.
bool molien_check(const ClassFunction& chi_v, Elem g, const SubgroupPtr& z, int degree);

/// Complete homogeneous symmetric functions h_0..h_degree of a multiset of
/// eigenvalues, from its power sums p[j-1] = sum of j-th powers.  For the
/// eigenvalues of x on W^dual this is the truncated graded character of
/// Sym(W^dual) at x.
std::vector<Cyclotomic> symmetric_hilbert_series(std::span<const Cyclotomic> w_power_sums, int degree);

/// Elementary symmetric functions e_0..e_d of the eigenvalues from power sums
/// p_1..p_d (Newton's identities).
std::vector<Cyclotomic> elementary_from_power_sums(std::span<const Cyclotomic> p, int d);

/// Honesty against the group's own character table.
bool is_honest(const ClassFunction& phi);

}  // namespace orbik
