#include "orbik/inertial_product.hpp"

#include <algorithm>
#include <string>

namespace orbik {

InertiaClass& InertiaClass::operator+=(const InertiaClass& other) {
  if (components.size() != other.components.size()) throw ContractError("inertia classes over different sectors");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += other.components[i];
  return *this;
}

bool InertiaClass::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const ClassFunction& f) { return f.is_zero(); });
}

InertialProduct::InertialProduct(GroupPtr group, const ClassFunction& chi_v, const ConjugacyOptions& options)
    : whole_(Subgroup::whole(group, options)), options_(options) {
  if (chi_v.group()->order() != group->order() || &chi_v.group()->ambient() != group.get()) {
    throw ContractError("representation character must be defined on the whole group");
  }
  v_ = GRep::make(ClassFunction(whole_, chi_v.values()));
  sectors_ = orbik::sectors(whole_, v_);
  const int r = static_cast<int>(whole_->num_classes());
  for (int c = 0; c < r; ++c) {
    tables_.push_back(character_table(sectors_[c].centralizer));
    const auto& t = tables_.back();
    for (std::size_t i = 0; i < t.size(); ++i) {
      basis_.push_back(BasisElement{c, sectors_[c].rep, static_cast<int>(i), *t[i].degree().as_long()});
    }
  }
  for (int c = 0; c < r; ++c) {
    pairs_.push_back(pair_sector_data(whole_, v_, sectors_, c, options));
    std::vector<ClassFunction> kos, der;
    for (const auto& p : pairs_.back()) {
      kos.push_back(koszul_factor(p));
      der.push_back(derived_class_D(p));
    }
    koszul_.push_back(std::move(kos));
    derived_.push_back(std::move(der));
  }
}

InertiaClass InertialProduct::zero() const {
  InertiaClass x;
  for (const auto& s : sectors_) x.components.push_back(ClassFunction::zero(s.centralizer));
  return x;
}

InertiaClass InertialProduct::unit() const {
  InertiaClass x = zero();
  x.components[0] = ClassFunction::trivial(sectors_[0].centralizer);
  return x;
}

InertiaClass InertialProduct::basis_element(std::size_t i) const {
  const auto& b = basis_.at(i);
  InertiaClass x = zero();
  x.components[b.class_index] = tables_[b.class_index][b.irrep];
  return x;
}

void InertialProduct::require_shape(const InertiaClass& x) const {
  if (x.components.size() != sectors_.size()) throw ContractError("inertia class does not match the sectors");
  for (std::size_t c = 0; c < sectors_.size(); ++c) {
    if (!x.components[c].group()->same_elements(*sectors_[c].centralizer)) {
      throw ContractError("inertia class component " + std::to_string(c) + " is not on the sector centralizer");
    }
  }
}

std::vector<long> InertialProduct::coordinates(const InertiaClass& x) const {
  require_shape(x);
  std::vector<long> out;
  for (std::size_t c = 0; c < sectors_.size(); ++c) {
    auto m = tables_[c].decompose_integral(x.components[c]);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

InertiaClass InertialProduct::generic_product(const InertiaClass& x, const InertiaClass& y, const RFactor& r) const {
  require_shape(x);
  require_shape(y);
  const auto& conj = whole_->conjugacy();
  InertiaClass out = zero();
  for (std::size_t kc = 0; kc < pairs_.size(); ++kc) {
    const auto& target = sectors_[kc].centralizer;
    for (std::size_t i = 0; i < pairs_[kc].size(); ++i) {
      const PairSector& p = pairs_[kc][i];
      const ClassFunction& xg = x.components[p.class_g];
      const ClassFunction& yh = y.components[p.class_h];
      if (xg.is_zero() || yh.is_zero()) continue;
      ClassFunction rf = r(p);
      if (!rf.group()->same_elements(*p.stabilizer)) {
        throw ContractError("R-factor is not a class function on the pair stabilizer");
      }
      ClassFunction f = restrict_transport(xg, conj.transporter[p.g], p.stabilizer);
      f *= restrict_transport(yh, conj.transporter[p.h], p.stabilizer);
      f *= rf;
      f *= koszul_[kc][i];
      if (f.is_zero()) continue;
      out.components[kc] += induce(f, target);
    }
  }
  return out;
}

InertiaClass InertialProduct::virtual_product(const InertiaClass& x, const InertiaClass& y) const {
  return generic_product(x, y, [this](const PairSector& p) -> ClassFunction {
    return derived_[p.target_class][p.orbit_index];
  });
}

ProductTable InertialProduct::product_table() const {
  ProductTable t;
  t.basis = basis_;
  const std::size_t n = basis_.size();
  t.constants.assign(n * n * n, 0);
  std::vector<InertiaClass> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(basis_element(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto coords = coordinates(virtual_product(elems[i], elems[j]));
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = coords[k];
    }
  }
  return t;
}

ProductTable InertialProduct::canonical_product_table() const {
  ProductTable t = product_table();
  if (!options_.seed) return t;
  const auto& conj = whole_->conjugacy();
  const auto canonical = Subgroup::whole(whole_->ambient_ptr());
  const std::size_t n = basis_.size();

  // Position of each seeded basis element in the canonical basis.
  std::vector<BasisElement> canon_basis;
  std::vector<std::size_t> offset;
  std::vector<CharacterTable> canon_tables;
  for (std::size_t c = 0; c < canonical->num_classes(); ++c) {
    offset.push_back(canon_basis.size());
    canon_tables.push_back(character_table(canonical->subgroup(canonical->conjugacy().centralizers[c])));
    const auto& ct = canon_tables.back();
    for (std::size_t i = 0; i < ct.size(); ++i) {
      canon_basis.push_back(BasisElement{static_cast<int>(c), canonical->rep(static_cast<int>(c)), static_cast<int>(i),
                                         *ct[i].degree().as_long()});
    }
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t b = 0; b < n; ++b) {
    const auto& e = basis_[b];
    const Elem r0 = canonical->rep(e.class_index);
    // t r t^-1 = r0 for the seeded representative r.
    const Elem t0 = conj.transporter[r0];
    const auto& ct = canon_tables[e.class_index];
    const ClassFunction moved = restrict_transport(tables_[e.class_index][e.irrep], t0, ct.group());
    const int idx = ct.find(moved);
    if (idx < 0) throw ContractError("canonical relabelling failed for basis element " + std::to_string(b));
    perm[b] = offset[e.class_index] + idx;
  }
  ProductTable out;
  out.basis = canon_basis;
  out.constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(perm[i], perm[j], perm[k]) = t.at(i, j, k);
  return out;
}

InertiaClass InertialProduct::involution(const InertiaClass& x) const {
  require_shape(x);
  const auto& conj = whole_->conjugacy();
  const FiniteGroup& amb = whole_->ambient();
  InertiaClass out = zero();
  for (std::size_t c = 0; c < sectors_.size(); ++c) {
    const Elem gi = amb.inv(sectors_[c].rep);
    const int src = conj.class_of[gi];
    out.components[c] = restrict_transport(x.components[src], conj.transporter[gi], sectors_[c].centralizer);
  }
  return out;
}

}  // namespace orbik
