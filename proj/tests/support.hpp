#pragma once

// Shared helpers and independent oracles for the test binaries.  Nothing in
// here calls the library's character machinery: values are produced from
// the Cayley table and elementwise sums only.

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbik/builtin.hpp"
#include "orbik/characters.hpp"
#include "orbik/cyclotomic.hpp"
#include "orbik/group.hpp"

namespace orbik::testing {

inline GroupPtr make_group(const std::string& name) { return std::make_shared<const FiniteGroup>(builtin_group(name)); }

/// Element of a permutation group with the given 0-based images.
inline Elem find_perm(const FiniteGroup& g, const Permutation& images) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.permutation(x) == images) return x;
  throw std::runtime_error("permutation not in group");
}

/// Numeric value of a cyclotomic number, for floating-point cross-checks.
inline std::complex<long double> numeric(const Cyclotomic& c) {
  const long double pi = std::acos(-1.0L);
  std::complex<long double> sum = 0;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    const long double angle = 2 * pi * static_cast<long double>(i) / c.conductor();
    sum += static_cast<long double>(c.coeffs()[i].get_d()) * std::polar(1.0L, angle);
  }
  return sum;
}

/// A class function stored per element of the whole group.
using ElementFunction = std::vector<Cyclotomic>;

inline Cyclotomic element_inner(const ElementFunction& a, const ElementFunction& b) {
  Cyclotomic s;
  for (std::size_t x = 0; x < a.size(); ++x) s += a[x] * b[x].conj();
  return s / Cyclotomic(static_cast<long>(a.size()));
}

/// Induction from the subgroup h (element list) by the defining formula.
inline ElementFunction element_induce(const FiniteGroup& g, const std::vector<Elem>& h, const ElementFunction& phi_on_g) {
  std::vector<char> in_h(g.order(), 0);
  for (Elem x : h) in_h[x] = 1;
  ElementFunction out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Cyclotomic s;
    for (Elem t = 0; t < g.order(); ++t) {
      const Elem y = g.mul(g.mul(g.inv(t), x), t);
      if (in_h[y]) s += phi_on_g[y];
    }
    out[x] = s / Cyclotomic(static_cast<long>(h.size()));
  }
  return out;
}

/*
  Irreducible characters by generate-and-reduce: candidates are the
  inductions of every linear character of every cyclic subgroup and the
  permutation characters of 2-generated subgroups, plus products of known
  irreducibles with candidates and with each other.  A candidate stripped of
  its known constituents that has norm one is a new irreducible.
*/
inline std::vector<ElementFunction> brute_force_irreducibles(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<ElementFunction> candidates = {ElementFunction(n, Cyclotomic(1L))};
  for (Elem x = 0; x < n; ++x) {
    const int m = g.elem_order(x);
    std::vector<Elem> cyc;
    for (int e = 0; e < m; ++e) cyc.push_back(g.power(x, e));
    for (int j = 0; j < m; ++j) {
      ElementFunction lin(n, Cyclotomic(0L));
      for (int e = 0; e < m; ++e) lin[cyc[e]] = Cyclotomic::root_of_unity(m, static_cast<long>(j) * e);
      candidates.push_back(element_induce(g, cyc, lin));
    }
  }
  // Permutation characters on the cosets of 2-generated subgroups.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      const Elem gens[] = {x, y};
      const auto h = g.generated_subgroup(gens);
      if (h.size() == n) continue;
      candidates.push_back(element_induce(g, h, ElementFunction(n, Cyclotomic(1L))));
    }
  std::vector<ElementFunction> irr;
  long total = 0;
  auto strip = [&](ElementFunction c) {
    for (const auto& chi : irr) {
      const Cyclotomic m = element_inner(c, chi);
      if (m.is_zero()) continue;
      for (std::size_t x = 0; x < n; ++x) c[x] -= m * chi[x];
    }
    return c;
  };
  auto absorb = [&](const ElementFunction& cand) {
    ElementFunction c = strip(cand);
    if (element_inner(c, c) != Cyclotomic(1L)) return false;
    if (c[0].as_long().value_or(0) < 0)
      for (auto& v : c) v = -v;
    total += *c[0].as_long() * *c[0].as_long();
    irr.push_back(std::move(c));
    return true;
  };
  for (int round = 0; round < 8 && total < static_cast<long>(n); ++round) {
    bool progress = false;
    for (const auto& c : candidates) progress = absorb(c) || progress;
    const auto known = irr;
    std::vector<ElementFunction> pool = candidates;
    pool.insert(pool.end(), known.begin(), known.end());
    for (const auto& a : known)
      for (const auto& c : pool) {
        ElementFunction prod(n);
        for (std::size_t x = 0; x < n; ++x) prod[x] = a[x] * c[x];
        progress = absorb(prod) || progress;
      }
    if (!progress) break;
  }
  if (total != static_cast<long>(n)) throw std::runtime_error("brute-force oracle did not complete the table");
  return irr;
}

inline ElementFunction on_elements(const ClassFunction& phi) {
  ElementFunction out;
  for (Elem x = 0; x < phi.group()->ambient().order(); ++x) out.push_back(phi.at(x));
  return out;
}

/// Orbits of C(k) on {(g, h) : g h = k} by direct union of conjugates.
struct BruteOrbit {
  std::vector<Elem> hs;
};

inline std::vector<BruteOrbit> brute_pair_orbits(const FiniteGroup& g, Elem k) {
  std::vector<Elem> ck;
  for (Elem c = 0; c < g.order(); ++c)
    if (g.commute(c, k)) ck.push_back(c);
  std::vector<int> label(g.order(), -1);
  std::vector<BruteOrbit> out;
  for (Elem h = 0; h < g.order(); ++h) {
    if (label[h] >= 0) continue;
    BruteOrbit o;
    for (Elem c : ck) {
      const Elem h2 = g.conj(c, h);
      if (label[h2] < 0) {
        label[h2] = static_cast<int>(out.size());
        o.hs.push_back(h2);
      }
    }
    out.push_back(o);
  }
  return out;
}

/// Integer determinant by fraction-free elimination.
inline long determinant(std::vector<std::vector<long>> a) {
  const std::size_t n = a.size();
  long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// det(1 - P(x)) for the permutation matrix of x.
inline long det_one_minus_perm(const FiniteGroup& g, Elem x) {
  const auto& p = g.permutation(x);
  const std::size_t d = p.size();
  std::vector<std::vector<long>> m(d, std::vector<long>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    m[i][i] += 1;
    m[p[i]][i] -= 1;
  }
  return d == 0 ? 1 : determinant(m);
}

}  // namespace orbik::testing
