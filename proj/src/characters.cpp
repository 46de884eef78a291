#include "orbik/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbik {

ClassFunction::ClassFunction(SubgroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw std::invalid_argument("class function without a group");
  if (values_.size() != group_->num_classes()) {
    throw std::invalid_argument("class function has " + std::to_string(values_.size()) + " values for " +
                                std::to_string(group_->num_classes()) + " classes");
  }
}

ClassFunction ClassFunction::zero(SubgroupPtr group) { return constant(std::move(group), Cyclotomic()); }

ClassFunction ClassFunction::constant(SubgroupPtr group, const Cyclotomic& c) {
  const std::size_t n = group->num_classes();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(n, c));
}

const Cyclotomic& ClassFunction::at(Elem x) const {
  const int c = group_->class_of(x);
  if (c < 0) throw ContractError("element " + std::to_string(x) + " is outside the class function's group");
  return values_[c];
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.is_zero(); });
}

ClassFunction ClassFunction::dual() const {
  ClassFunction out = *this;
  for (auto& v : out.values_) v = v.conj();
  return out;
}

void ClassFunction::require_same_group(const ClassFunction& other, const char* op) const {
  if (group_ == other.group_) return;
  if (!group_ || !other.group_ || !group_->same_elements(*other.group_)) {
    throw ContractError(std::string("class functions on different groups in ") + op);
  }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_group(other, "+");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  require_same_group(other, "-");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& other) {
  require_same_group(other, "*");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

ClassFunction ClassFunction::operator-() const {
  ClassFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (a.group_ != b.group_ && !(a.group_ && b.group_ && a.group_->same_elements(*b.group_))) return false;
  return a.values_ == b.values_;
}

CharacterTable CharacterTable::of(SubgroupPtr group) {
  CharacterTable t;
  const TableData& data = group->table_data();
  t.group_ = group;
  t.irreducibles_.reserve(data.rows.size());
  for (const auto& row : data.rows) t.irreducibles_.emplace_back(group, row);
  return t;
}

CharacterTable character_table(const SubgroupPtr& h) { return CharacterTable::of(h); }

std::vector<std::size_t> CharacterTable::class_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < group_->num_classes(); ++c) out.push_back(group_->class_size(static_cast<int>(c)));
  return out;
}

std::vector<int> CharacterTable::element_orders() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < group_->num_classes(); ++c) {
    out.push_back(group_->ambient().elem_order(group_->rep(static_cast<int>(c))));
  }
  return out;
}

std::vector<Cyclotomic> CharacterTable::decompose(const ClassFunction& phi) const {
  std::vector<Cyclotomic> out;
  out.reserve(irreducibles_.size());
  for (const auto& chi : irreducibles_) out.push_back(inner_product(phi, chi));
  return out;
}

std::vector<long> CharacterTable::decompose_integral(const ClassFunction& phi) const {
  std::vector<long> out;
  for (const auto& m : decompose(phi)) {
    auto v = m.as_long();
    if (!v) throw ContractError("multiplicity " + m.str() + " is not an integer");
    out.push_back(*v);
  }
  return out;
}

bool CharacterTable::is_honest(const ClassFunction& phi) const {
  for (const auto& m : decompose(phi)) {
    auto v = m.as_integer();
    if (!v || *v < 0) return false;
  }
  return true;
}

int CharacterTable::find(const ClassFunction& phi) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    if (irreducibles_[i] == phi) return static_cast<int>(i);
  }
  return -1;
}

bool is_honest(const ClassFunction& phi) { return character_table(phi.group()).is_honest(phi); }

Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  const auto& h = phi.group();
  if (h != psi.group() && !h->same_elements(*psi.group())) {
    throw ContractError("inner product of class functions on different groups");
  }
  Cyclotomic sum;
  for (std::size_t c = 0; c < h->num_classes(); ++c) {
    if (phi[c].is_zero() || psi[c].is_zero()) continue;
    sum += phi[c] * psi[c].conj() * Cyclotomic(static_cast<long>(h->class_size(static_cast<int>(c))));
  }
  return sum / Cyclotomic(static_cast<long>(h->order()));
}

ClassFunction induce(const ClassFunction& phi, const SubgroupPtr& g) {
  const Subgroup& h = *phi.group();
  if (!g->contains(h)) throw ContractError("induce: subgroup is not contained in the target group");
  std::vector<Cyclotomic> bucket(g->num_classes());
  for (std::size_t c = 0; c < h.num_classes(); ++c) {
    if (phi[c].is_zero()) continue;
    const int gc = g->class_of(h.rep(static_cast<int>(c)));
    bucket[gc] += phi[c] * Cyclotomic(static_cast<long>(h.class_size(static_cast<int>(c))));
  }
  // Ind phi(x) = |C_G(x)| / |H| * sum over H cap class(x) of phi.
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    if (bucket[c].is_zero()) continue;
    bucket[c] *= Cyclotomic(Rational(static_cast<long>(g->centralizer_order(static_cast<int>(c))),
                                     static_cast<long>(h.order())));
  }
  return ClassFunction(g, std::move(bucket));
}

ClassFunction restrict_transport(const ClassFunction& phi, Elem t, const SubgroupPtr& target) {
  const FiniteGroup& amb = target->ambient();
  const Elem tinv = amb.inv(t);
  for (Elem z : target->elements()) {
    if (!phi.group()->contains(amb.conj(tinv, z))) {
      throw ContractError("restrict_transport: target is not contained in the transported group");
    }
  }
  std::vector<Cyclotomic> values;
  values.reserve(target->num_classes());
  for (std::size_t c = 0; c < target->num_classes(); ++c) {
    values.push_back(phi.at(amb.conj(tinv, target->rep(static_cast<int>(c)))));
  }
  return ClassFunction(target, std::move(values));
}

ClassFunction restrict(const ClassFunction& phi, const SubgroupPtr& target) {
  if (phi.group() == target) return phi;
  return restrict_transport(phi, 0, target);
}

ClassFunction adams(const ClassFunction& phi, long k) {
  const Subgroup& h = *phi.group();
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < h.num_classes(); ++c) values.push_back(phi[h.power_class(static_cast<int>(c), k)]);
  return ClassFunction(phi.group(), std::move(values));
}

std::vector<Cyclotomic> elementary_from_power_sums(std::span<const Cyclotomic> p, int d) {
  std::vector<Cyclotomic> e(d + 1);
  e[0] = Cyclotomic(1L);
  for (int i = 1; i <= d; ++i) {
    Cyclotomic acc;
    for (int j = 1; j <= i; ++j) {
      Cyclotomic term = e[i - j] * p[j - 1];
      if (j % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[i] = acc / Cyclotomic(static_cast<long>(i));
  }
  return e;
}

std::vector<Cyclotomic> symmetric_hilbert_series(std::span<const Cyclotomic> p, int degree) {
  std::vector<Cyclotomic> h(degree + 1);
  h[0] = Cyclotomic(1L);
  for (int n = 1; n <= degree; ++n) {
    Cyclotomic acc;
    for (int j = 1; j <= n; ++j) acc += p[j - 1] * h[n - j];
    h[n] = acc / Cyclotomic(static_cast<long>(n));
  }
  return h;
}

namespace {

long honest_degree(const ClassFunction& phi, const char* op) {
  if (!is_honest(phi)) throw ContractError(std::string(op) + ": class function is not an honest character");
  return *phi.degree().as_long();
}

// Power sums p_j = phi(x^j), j = 1..count, at the representative of class c.
std::vector<Cyclotomic> power_sums(const ClassFunction& phi, int c, int count, bool dual) {
  const Subgroup& h = *phi.group();
  std::vector<Cyclotomic> p;
  p.reserve(count);
  for (int j = 1; j <= count; ++j) {
    const Cyclotomic& v = phi[h.power_class(c, j)];
    p.push_back(dual ? v.conj() : v);
  }
  return p;
}

}  // namespace

ClassFunction exterior_power(const ClassFunction& phi, int i) {
  if (i < 0) throw std::invalid_argument("exterior power index must be nonnegative");
  const long d = honest_degree(phi, "exterior_power");
  if (i > d) return ClassFunction::zero(phi.group());
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < phi.group()->num_classes(); ++c) {
    auto p = power_sums(phi, static_cast<int>(c), i, false);
    values.push_back(elementary_from_power_sums(p, i)[i]);
  }
  return ClassFunction(phi.group(), std::move(values));
}

ClassFunction lambda_minus_one_dual(const ClassFunction& phi) {
  const long d = honest_degree(phi, "lambda_minus_one_dual");
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < phi.group()->num_classes(); ++c) {
    auto p = power_sums(phi, static_cast<int>(c), static_cast<int>(d), true);
    auto e = elementary_from_power_sums(p, static_cast<int>(d));
    Cyclotomic acc;
    for (long i = 0; i <= d; ++i) {
      if (i % 2 == 0) {
        acc += e[i];
      } else {
        acc -= e[i];
      }
    }
    values.push_back(std::move(acc));
  }
  return ClassFunction(phi.group(), std::move(values));
}

ClassFunction fixed_subspace_character(const ClassFunction& chi_v, std::span<const Elem> a, const SubgroupPtr& z) {
  const FiniteGroup& amb = z->ambient();
  const std::vector<Elem> gen = amb.generated_subgroup(a);
  for (Elem x : z->elements()) {
    for (Elem y : a) {
      if (!amb.commute(x, y)) throw ContractError("fixed_subspace_character: Z does not centralize <A>");
    }
  }
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < z->num_classes(); ++c) {
    const Elem rep = z->rep(static_cast<int>(c));
    Cyclotomic acc;
    for (Elem y : gen) acc += chi_v.at(amb.mul(rep, y));
    values.push_back(acc / Cyclotomic(static_cast<long>(gen.size())));
  }
  return ClassFunction(z, std::move(values));
}

bool molien_check(const ClassFunction& chi_v, Elem g, const SubgroupPtr& z, int degree) {
  if (degree < 1) throw std::invalid_argument("molien_check degree must be at least 1");
  const FiniteGroup& amb = z->ambient();
  for (Elem x : z->elements()) {
    if (!amb.commute(x, g)) throw ContractError("molien_check: Z is not contained in C(g)");
  }
  const ClassFunction v = restrict(chi_v, z);
  const Elem gs[] = {g};
  const ClassFunction vg = fixed_subspace_character(chi_v, gs, z);
  const ClassFunction quotient = v - vg;
  const long dim_q = honest_degree(quotient, "molien_check");
  const int count = std::max<int>(degree, static_cast<int>(dim_q));

  for (std::size_t c = 0; c < z->num_classes(); ++c) {
    const int ci = static_cast<int>(c);
    const auto pv = power_sums(v, ci, count, true);
    const auto pvg = power_sums(vg, ci, count, true);
    std::vector<Cyclotomic> pq(count);
    for (int j = 0; j < count; ++j) pq[j] = pv[j] - pvg[j];

    // lambda_{-t}(Q^dual) = sum_i (-1)^i e_i t^i
    const auto e = elementary_from_power_sums(pq, static_cast<int>(dim_q));
    const auto hv = symmetric_hilbert_series(pv, degree);
    const auto hvg = symmetric_hilbert_series(pvg, degree);
    for (int n = 0; n <= degree; ++n) {
      Cyclotomic lhs;
      for (int i = 0; i <= std::min<long>(n, dim_q); ++i) {
        Cyclotomic term = e[i] * hv[n - i];
        if (i % 2 == 0) {
          lhs += term;
        } else {
          lhs -= term;
        }
      }
      if (lhs != hvg[n]) return false;
    }
  }
  return true;
}

}  // namespace orbik
