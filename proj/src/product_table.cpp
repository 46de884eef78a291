#include "orbik/product_table.hpp"

#include <sstream>

namespace orbik {

std::vector<std::array<long, 4>> ProductTable::sparse() const {
  std::vector<std::array<long, 4>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (long v = at(i, j, k); v != 0) {
          out.push_back({static_cast<long>(i), static_cast<long>(j), static_cast<long>(k), v});
        }
      }
  return out;
}

int ProductTable::unit_index() const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].class_index == 0 && basis[i].irrep == 0) return static_cast<int>(i);
  }
  return -1;
}

TableDiff compare_tables(const ProductTable& a, const ProductTable& b) {
  TableDiff d;
  if (a.basis.size() != b.basis.size()) {
    d.same_basis = false;
    d.first_mismatch = "basis sizes differ: " + std::to_string(a.basis.size()) + " vs " + std::to_string(b.basis.size());
    return d;
  }
  for (std::size_t i = 0; i < a.basis.size(); ++i) {
    const auto& x = a.basis[i];
    const auto& y = b.basis[i];
    if (x.class_index != y.class_index || x.irrep != y.irrep || x.degree != y.degree) {
      d.same_basis = false;
      d.first_mismatch = "basis element " + std::to_string(i) + " differs";
      return d;
    }
  }
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++d.compared;
        if (a.at(i, j, k) != b.at(i, j, k)) {
          if (d.mismatches++ == 0) {
            std::ostringstream os;
            os << "N[" << i << "][" << j << "][" << k << "] = " << a.at(i, j, k) << " vs " << b.at(i, j, k);
            d.first_mismatch = os.str();
          }
        }
      }
  return d;
}

RingReport ring_property_check(const ProductTable& t) {
  RingReport r;
  const std::size_t n = t.size();
  auto note = [&](const std::string& what) {
    if (r.first_counterexample.empty()) r.first_counterexample = what;
  };
  const int u = t.unit_index();
  if (u < 0) {
    r.unit = false;
    note("no basis element for the trivial character at the identity class");
  } else {
    for (std::size_t j = 0; j < n && r.unit; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const long delta = j == k ? 1 : 0;
        if (t.at(u, j, k) != delta || t.at(j, u, k) != delta) {
          r.unit = false;
          note("unit fails on basis element " + std::to_string(j));
          break;
        }
      }
  }
  for (std::size_t i = 0; i < n && r.commutative; ++i)
    for (std::size_t j = i + 1; j < n && r.commutative; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (t.at(i, j, k) != t.at(j, i, k)) {
          r.commutative = false;
          note("N[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "] != N[" +
               std::to_string(j) + "][" + std::to_string(i) + "][" + std::to_string(k) + "]");
          break;
        }
      }
  // (e_i e_j) e_k = e_i (e_j e_k)
  for (std::size_t i = 0; i < n && r.associative; ++i)
    for (std::size_t j = 0; j < n && r.associative; ++j)
      for (std::size_t k = 0; k < n && r.associative; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          long lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += t.at(i, j, m) * t.at(m, k, l);
            rhs += t.at(j, k, m) * t.at(i, m, l);
          }
          if (lhs != rhs) {
            r.associative = false;
            note("associativity fails on (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                 std::to_string(k) + ") at coordinate " + std::to_string(l));
            break;
          }
        }
  return r;
}

}  // namespace orbik
