#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "orbik/group.hpp"

namespace orbik {

/// Basis label ([g], sigma): a class of G and an irreducible of C(g) in the
/// centralizer's table order.
struct BasisElement {
  int class_index;
  Elem rep;
  int irrep;
  long degree;  // sigma(1)

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Structure constants N_ij^k on a labelled basis, stored densely.
struct ProductTable {
  std::vector<BasisElement> basis;
  std::vector<long> constants;  // (i * n + j) * n + k

  std::size_t size() const { return basis.size(); }
  long at(std::size_t i, std::size_t j, std::size_t k) const { return constants[(i * size() + j) * size() + k]; }
  long& at(std::size_t i, std::size_t j, std::size_t k) { return constants[(i * size() + j) * size() + k]; }
  /// Nonzero entries as [i, j, k, N].
  std::vector<std::array<long, 4>> sparse() const;
  /// Index of the basis element (class 0, irrep 0), or -1.
  int unit_index() const;
};

struct TableDiff {
  bool same_basis = true;
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;

  bool identical() const { return same_basis && mismatches == 0; }
};

/// Entry-for-entry comparison of two tables on the same basis.
TableDiff compare_tables(const ProductTable& a, const ProductTable& b);

struct RingReport {
  bool unit = true;
  bool commutative = true;
  bool associative = true;
  std::string first_counterexample;

  bool passed() const { return unit && commutative && associative; }
};

/// Two-sided unit, commutativity and associativity of the structure
/// constants, checked exhaustively on the basis.
RingReport ring_property_check(const ProductTable& table);

}  // namespace orbik
