#include "orbik/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "orbik/cyclotomic.hpp"

namespace orbik {

namespace {

// Portable Fisher-Yates so seeded runs agree across standard libraries.
template <class T>
void seeded_shuffle(std::vector<T>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

void FiniteGroup::finish() {
  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  orders_.assign(order_, 1);
  for (Elem a = 0; a < order_; ++a) {
    Elem x = a;
    int k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw ParseError("Cayley table is empty");
  if (n > kMaxGroupOrder) throw ParseError("Cayley table exceeds the group order cap of 4096");
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw ParseError("Cayley table is not square");
    std::vector<char> seen(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError("Cayley table entry out of range");
      if (seen[v]) throw ContractError("Cayley table row " + std::to_string(i) + " repeats an element");
      seen[v] = 1;
      g.table_[i * n + j] = static_cast<std::uint16_t>(v);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]]) throw ContractError("Cayley table column " + std::to_string(j) + " repeats an element");
      seen[table[i][j]] = 1;
    }
    if (static_cast<std::size_t>(table[0][j]) != j || static_cast<std::size_t>(table[j][0]) != j) {
      throw ContractError("Cayley table: element 0 must be the identity");
    }
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      throw ContractError("Cayley table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                       ", " + std::to_string(c) + ")");
    }
  };
  if (n <= 256) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 1000000; ++t) check(rng() % n, rng() % n, rng() % n);
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<Permutation>& generators) {
  if (degree < 0 || degree > 32) throw ParseError("permutation degree must lie in 0..32");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) throw ParseError("permutation has the wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]) throw ParseError("malformed permutation");
      seen[v] = 1;
    }
  }
  // x * s means "apply s, then x".
  auto compose = [&](const Permutation& x, const Permutation& s) {
    Permutation out(degree);
    for (int i = 0; i < degree; ++i) out[i] = x[s[i]];
    return out;
  };

  FiniteGroup g;
  g.degree_ = degree;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Permutation, Elem> index;
  g.perms_.push_back(id);
  index.emplace(id, 0);
  std::vector<std::vector<Elem>> right(0);  // right[x][j] = x * gen_j
  std::vector<Elem> parent{0};
  std::vector<int> parent_gen{-1};
  for (std::size_t x = 0; x < g.perms_.size(); ++x) {
    std::vector<Elem> row(generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
      Permutation y = compose(g.perms_[x], generators[j]);
      auto [it, inserted] = index.emplace(y, static_cast<Elem>(g.perms_.size()));
      if (inserted) {
        if (g.perms_.size() >= kMaxGroupOrder) {
          throw ContractError("generators produce a group larger than the order cap of 4096");
        }
        g.perms_.push_back(std::move(y));
        parent.push_back(static_cast<Elem>(x));
        parent_gen.push_back(static_cast<int>(j));
      }
      row[j] = it->second;
    }
    right.push_back(std::move(row));
  }
  const std::size_t n = g.perms_.size();
  g.order_ = n;
  g.table_.assign(n * n, 0);
  // b = parent(b) * gen, so a * b = (a * parent(b)) * gen.
  for (std::size_t a = 0; a < n; ++a) {
    g.table_[a * n] = static_cast<std::uint16_t>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const Elem ap = g.table_[a * n + parent[b]];
      g.table_[a * n + b] = static_cast<std::uint16_t>(right[ap][parent_gen[b]]);
    }
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_cycles(int degree, const std::vector<std::vector<std::vector<int>>>& generators) {
  std::vector<Permutation> perms;
  for (const auto& cycles : generators) {
    Permutation p(std::max(degree, 0));
    std::iota(p.begin(), p.end(), 0);
    std::vector<char> used(p.size(), 0);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int a = cycle[i];
        const int b = cycle[(i + 1) % cycle.size()];
        if (a < 1 || a > degree || b < 1 || b > degree) throw ParseError("cycle point out of range 1..degree");
        if (used[a - 1]) throw ParseError("point repeated across cycles of one generator");
        used[a - 1] = 1;
        p[a - 1] = b - 1;
      }
    }
    perms.push_back(std::move(p));
  }
  return from_permutations(degree, perms);
}

Elem FiniteGroup::power(Elem a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= orders_[a];
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::exponent() const {
  long e = 1;
  for (int o : orders_) e = std::lcm(e, static_cast<long>(o));
  return static_cast<int>(e);
}

std::vector<Elem> FiniteGroup::generated_subgroup(std::span<const Elem> elems) const {
  std::vector<Elem> gens;
  for (Elem x : elems) {
    if (x >= order_) throw std::out_of_range("element index out of range");
    if (x != 0) gens.push_back(x);
  }
  std::vector<char> in(order_, 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> FiniteGroup::all_elements() const {
  std::vector<Elem> out(order_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

ConjugacyData conjugacy_data(const FiniteGroup& g, std::span<const Elem> elements, const ConjugacyOptions& options) {
  ConjugacyData d;
  d.class_of.assign(g.order(), -1);
  d.transporter.assign(g.order(), 0);
  constexpr int kUnassigned = -2;
  for (Elem x : elements) d.class_of[x] = kUnassigned;

  for (Elem x : elements) {
    if (d.class_of[x] != kUnassigned) continue;
    const int c = static_cast<int>(d.classes.size());
    std::vector<Elem> cls;
    for (Elem t : elements) {
      const Elem y = g.conj(t, x);
      if (d.class_of[y] == kUnassigned) {
        d.class_of[y] = c;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    d.classes.push_back(std::move(cls));
  }

  std::vector<Elem> scan(elements.begin(), elements.end());
  if (options.seed) seeded_shuffle(scan, *options.seed);
  std::mt19937_64 rep_rng(options.seed.value_or(0) ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& cls : d.classes) {
    d.reps.push_back(options.seed ? cls[rep_rng() % cls.size()] : cls.front());
  }

  std::vector<char> done(g.order(), 0);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const Elem r = d.reps[c];
    std::size_t remaining = d.classes[c].size();
    std::vector<Elem> cent;
    for (Elem t : scan) {
      const Elem y = g.conj(t, r);
      if (y == r) cent.push_back(t);
      if (remaining > 0 && !done[y]) {
        done[y] = 1;
        d.transporter[y] = t;
        --remaining;
      }
    }
    std::sort(cent.begin(), cent.end());
    d.centralizers.push_back(std::move(cent));
  }
  return d;
}

ConjugacyData conjugacy_data(const FiniteGroup& g, const ConjugacyOptions& options) {
  const auto all = g.all_elements();
  return conjugacy_data(g, all, options);
}

Subgroup::Subgroup(GroupPtr group, std::vector<Elem> elements, const ConjugacyOptions& options)
    : group_(std::move(group)), elements_(std::move(elements)) {
  conj_ = conjugacy_data(*group_, elements_, options);
}

std::shared_ptr<const Subgroup> Subgroup::whole(GroupPtr group, const ConjugacyOptions& options) {
  auto elems = group->all_elements();
  return make_unchecked(std::move(group), std::move(elems), options);
}

std::shared_ptr<const Subgroup> Subgroup::make(GroupPtr group, std::vector<Elem> elements,
                                               const ConjugacyOptions& options) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> in(group->order(), 0);
  for (Elem x : elements) {
    if (x >= group->order()) throw std::out_of_range("subgroup element out of range");
    in[x] = 1;
  }
  if (elements.empty() || elements.front() != 0) throw ContractError("subgroup must contain the identity");
  for (Elem a : elements) {
    for (Elem b : elements) {
      if (!in[group->mul(a, b)]) throw ContractError("element set is not closed under multiplication");
    }
  }
  return make_unchecked(std::move(group), std::move(elements), options);
}

std::shared_ptr<const Subgroup> Subgroup::make_unchecked(GroupPtr group, std::vector<Elem> elements,
                                                         const ConjugacyOptions& options) {
  return std::shared_ptr<const Subgroup>(new Subgroup(std::move(group), std::move(elements), options));
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.group_ != group_ && other.group_.get() != group_.get()) return false;
  return std::all_of(other.elements_.begin(), other.elements_.end(), [&](Elem x) { return contains(x); });
}

bool Subgroup::same_elements(const Subgroup& other) const {
  return group_ == other.group_ && elements_ == other.elements_;
}

std::shared_ptr<const Subgroup> Subgroup::subgroup(std::vector<Elem> elements) const {
  std::sort(elements.begin(), elements.end());
  std::lock_guard<std::mutex> lock(children_mutex_);
  auto it = children_.find(elements);
  if (it != children_.end()) return it->second;
  auto sub = make_unchecked(group_, elements);
  children_.emplace(std::move(elements), sub);
  return sub;
}

int Subgroup::exponent() const {
  long e = 1;
  for (Elem x : elements_) e = std::lcm(e, static_cast<long>(group_->elem_order(x)));
  return static_cast<int>(e);
}

int Subgroup::power_class(int c, long k) const { return class_of(group_->power(rep(c), k)); }

std::vector<PairOrbit> pair_orbits(const FiniteGroup& g, const ConjugacyData& conj, Elem k,
                                   const ConjugacyOptions& options) {
  auto it = std::find(conj.reps.begin(), conj.reps.end(), k);
  if (it == conj.reps.end()) {
    throw std::invalid_argument("pair_orbits: element " + std::to_string(k) + " is not a class representative");
  }
  const auto& cent = conj.centralizers[it - conj.reps.begin()];

  std::vector<Elem> scan;
  for (Elem h = 0; h < g.order(); ++h) {
    if (conj.class_of[h] >= 0) scan.push_back(h);
  }
  if (options.seed) seeded_shuffle(scan, *options.seed ^ (0x51ed27ULL + k));

  // z (g, h) z^-1 = (z g z^-1, z h z^-1) and g = k h^-1, so orbits of pairs
  // are orbits of C(k) on the second coordinate.
  std::vector<char> seen(g.order(), 0);
  std::vector<PairOrbit> out;
  for (Elem h : scan) {
    if (seen[h]) continue;
    PairOrbit orbit{k, g.mul(k, g.inv(h)), h, {}, 0};
    for (Elem z : cent) {
      const Elem y = g.conj(z, h);
      if (!seen[y]) {
        seen[y] = 1;
        ++orbit.orbit_size;
      }
      if (y == h) orbit.stabilizer.push_back(z);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Elem> intersect_sorted(std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<Elem> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace orbik
