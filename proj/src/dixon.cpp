// Character tables by Dixon's method.
//
// The central characters omega_chi(C_k) = |C_k| chi(g_k) / chi(1) form a
// common eigenvector of the class matrices M_j, (M_j)_{ik} = a_{ijk}, where
// a_{ijk} counts pairs (x, y) in C_i x C_j with x y = g_k.  Working modulo a
// prime p = 1 (mod exponent) with p > 2 sqrt|H|, the eigenspaces split
// completely; each 1-dimensional common eigenspace determines chi(1) and
// chi mod p, and the eigenvalue multiplicities of every rho(g) are recovered
// exactly from the values on the powers of g.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "orbik/characters.hpp"

namespace orbik {

namespace {

using u64 = std::uint64_t;

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw ContractError("Dixon: inverting zero modulo p");
    return pow(a, p - 2);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 choose_prime(u64 exponent, u64 order) {
  for (u64 p = exponent + 1;; p += exponent) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

u64 primitive_root(const Zp& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 2
}

using Matrix = std::vector<std::vector<u64>>;

// Row-reduces in place; returns pivot columns.
std::vector<int> rref(Matrix& m, const Zp& f) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const u64 s = f.inv(m[row][c]);
    for (auto& v : m[row]) v = f.mul(v, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const u64 factor = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {c : m c = 0}.
Matrix kernel(Matrix m, int cols, const Zp& f) {
  auto pivots = rref(m, f);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix out;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial via reduction to upper Hessenberg form;
// coefficients constant term first.
std::vector<u64> charpoly(Matrix h, const Zp& f) {
  const int n = static_cast<int>(h.size());
  for (int c = 0; c + 2 < n; ++c) {
    const int piv = c + 1;
    int sel = piv;
    while (sel < n && h[sel][c] == 0) ++sel;
    if (sel == n) continue;
    if (sel != piv) {
      std::swap(h[sel], h[piv]);
      for (int r = 0; r < n; ++r) std::swap(h[r][sel], h[r][piv]);
    }
    const u64 inv = f.inv(h[piv][c]);
    for (int i = piv + 1; i < n; ++i) {
      if (h[i][c] == 0) continue;
      const u64 u = f.mul(h[i][c], inv);
      for (int k = 0; k < n; ++k) h[i][k] = f.sub(h[i][k], f.mul(u, h[piv][k]));
      for (int r = 0; r < n; ++r) h[r][piv] = f.add(h[r][piv], f.mul(u, h[r][i]));
    }
  }
  std::vector<std::vector<u64>> polys{{1}};
  for (int m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<u64> cur(m + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], prev[i]);
      cur[i] = f.sub(cur[i], f.mul(h[m - 1][m - 1], prev[i]));
    }
    u64 t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t = f.mul(t, h[i][i - 1]);
      const u64 coef = f.mul(h[i - 1][m - 1], t);
      if (coef == 0) continue;
      for (std::size_t k = 0; k < polys[i - 1].size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, polys[i - 1][k]));
    }
    polys.push_back(std::move(cur));
  }
  return polys[n];
}

std::vector<u64> roots(const std::vector<u64>& poly, const Zp& f) {
  std::vector<u64> out;
  const std::size_t deg = poly.size() - 1;
  for (u64 x = 0; x < f.p && out.size() < deg; ++x) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, x), poly[i]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

struct Space {
  Matrix basis;  // rows in reduced echelon form
  std::vector<int> pivots;
};

}  // namespace

TableData dixon_character_table(const Subgroup& h) {
  const FiniteGroup& g = h.ambient();
  const int r = static_cast<int>(h.num_classes());
  const u64 order = h.order();
  const u64 e = static_cast<u64>(h.exponent());
  const Zp f{choose_prime(e, order)};

  std::vector<int> inverse_class(r);
  for (int k = 0; k < r; ++k) inverse_class[k] = h.class_of(g.inv(h.rep(k)));

  auto class_matrix = [&](int j) {
    Matrix m(r, std::vector<u64>(r, 0));
    for (int k = 0; k < r; ++k) {
      const Elem z = h.rep(k);
      for (Elem y : h.conjugacy().classes[j]) ++m[h.class_of(g.mul(z, g.inv(y)))][k];
    }
    for (auto& row : m)
      for (auto& v : row) v %= f.p;
    return m;
  };

  std::vector<Space> spaces;
  {
    Space all;
    for (int i = 0; i < r; ++i) {
      std::vector<u64> v(r, 0);
      v[i] = 1;
      all.basis.push_back(std::move(v));
      all.pivots.push_back(i);
    }
    spaces.push_back(std::move(all));
  }

  auto unsplit = [&] {
    return std::any_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() > 1; });
  };

  for (int j = 1; j < r && unsplit(); ++j) {
    const Matrix mj = class_matrix(j);
    std::vector<Space> next;
    for (auto& space : spaces) {
      const int dim = static_cast<int>(space.basis.size());
      if (dim == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Coordinates of M_j v_i in the echelon basis are read at the pivots.
      Matrix a(dim, std::vector<u64>(dim, 0));
      for (int i = 0; i < dim; ++i) {
        for (int l = 0; l < dim; ++l) {
          const auto& row = mj[space.pivots[l]];
          u64 acc = 0;
          for (int k = 0; k < r; ++k) {
            if (space.basis[i][k]) acc = f.add(acc, f.mul(row[k], space.basis[i][k]));
          }
          a[i][l] = acc;
        }
      }
      const auto eig = roots(charpoly(a, f), f);
      if (eig.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      int total = 0;
      for (u64 lambda : eig) {
        // c^T (A - lambda I) = 0
        Matrix t(dim, std::vector<u64>(dim, 0));
        for (int i = 0; i < dim; ++i)
          for (int l = 0; l < dim; ++l) t[l][i] = f.sub(a[i][l], i == l ? lambda : 0);
        Space sub;
        for (const auto& c : kernel(t, dim, f)) {
          std::vector<u64> v(r, 0);
          for (int i = 0; i < dim; ++i) {
            if (!c[i]) continue;
            for (int k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[i], space.basis[i][k]));
          }
          sub.basis.push_back(std::move(v));
        }
        sub.pivots = rref(sub.basis, f);
        total += static_cast<int>(sub.basis.size());
        next.push_back(std::move(sub));
      }
      if (total != dim) throw ContractError("Dixon: class matrix is not diagonalizable modulo p");
    }
    spaces = std::move(next);
  }
  if (unsplit() || static_cast<int>(spaces.size()) != r) {
    throw ContractError("Dixon: common eigenspaces did not split into lines");
  }

  const u64 z = f.pow(primitive_root(f), (f.p - 1) / e);
  TableData out;
  out.prime = f.p;
  long sum_squares = 0;
  for (const auto& space : spaces) {
    std::vector<u64> w = space.basis[0];
    if (w[0] == 0) throw ContractError("Dixon: eigenvector vanishes on the identity class");
    const u64 s0 = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, s0);

    u64 norm = 0;
    for (int k = 0; k < r; ++k) {
      norm = f.add(norm, f.mul(f.mul(w[k], w[inverse_class[k]]), f.inv(h.class_size(k) % f.p)));
    }
    const u64 d2 = f.mul(order % f.p, f.inv(norm));
    u64 d = 0;
    for (u64 c = 1; c * c <= order; ++c) {
      if (c * c % f.p == d2) {
        d = c;
        break;
      }
    }
    if (d == 0) throw ContractError("Dixon: no admissible degree for an eigenvector");
    sum_squares += static_cast<long>(d * d);

    std::vector<u64> chi(r);
    for (int k = 0; k < r; ++k) chi[k] = f.mul(f.mul(d, w[k]), f.inv(h.class_size(k) % f.p));

    std::vector<Cyclotomic> values(r);
    for (int k = 0; k < r; ++k) {
      const Elem x = h.rep(k);
      const int o = g.elem_order(x);
      const u64 zo = f.pow(z, e / o);
      const u64 zo_inv = f.inv(zo);
      const u64 o_inv = f.inv(o);
      std::vector<u64> pow_vals(o);
      for (int l = 0; l < o; ++l) pow_vals[l] = chi[h.class_of(g.power(x, l))];
      std::vector<Rational> mult(o, 0);
      u64 total = 0;
      for (int jj = 0; jj < o; ++jj) {
        const u64 step = f.pow(zo_inv, jj);
        u64 acc = 0, tw = 1;
        for (int l = 0; l < o; ++l) {
          acc = f.add(acc, f.mul(pow_vals[l], tw));
          tw = f.mul(tw, step);
        }
        const u64 m = f.mul(acc, o_inv);
        if (m > d) throw ContractError("Dixon: eigenvalue multiplicity out of range");
        total += m;
        mult[jj] = static_cast<long>(m);
      }
      if (total != d) throw ContractError("Dixon: eigenvalue multiplicities do not sum to the degree");
      values[k] = Cyclotomic::from_powers(o, mult);
    }
    out.rows.push_back(std::move(values));
  }
  if (sum_squares != static_cast<long>(order)) {
    throw ContractError("Dixon: squared degrees sum to " + std::to_string(sum_squares) + ", not the group order");
  }

  std::sort(out.rows.begin(), out.rows.end(), [](const auto& a, const auto& b) {
    const long da = *a[0].as_long(), db = *b[0].as_long();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto c = canonical_compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

const TableData& Subgroup::table_data() const {
  std::call_once(table_once_, [this] { table_ = std::make_shared<const TableData>(dixon_character_table(*this)); });
  return *table_;
}

}  // namespace orbik
