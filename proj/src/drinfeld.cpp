#include "orbik/drinfeld.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace orbik {

DrinfeldDouble::DrinfeldDouble(GroupPtr group, const ConjugacyOptions& options)
    : group_(std::move(group)), whole_(Subgroup::whole(group_)) {
  const FiniteGroup& g = *group_;
  const std::size_t n = g.order();
  const auto& conj = whole_->conjugacy();

  std::vector<Elem> scan(n);
  std::iota(scan.begin(), scan.end(), 0);
  if (options.seed) {
    std::mt19937_64 rng(*options.seed ^ 0xd0b1eULL);
    for (std::size_t i = n; i > 1; --i) std::swap(scan[i - 1], scan[rng() % i]);
  }
  // One coset representative of C(a) per element of the class of a.
  transversal_.assign(n, 0);
  std::vector<char> hit(n, 0);
  for (std::size_t c = 0; c < conj.num_classes(); ++c) {
    const Elem a = conj.reps[c];
    for (Elem t : scan) {
      const Elem b = g.conj(t, a);
      if (!hit[b]) {
        hit[b] = 1;
        transversal_[b] = t;
      }
    }
  }

  centralizer_of_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    offset_.push_back(pair_a_.size());
    for (Elem x = 0; x < n; ++x) {
      if (g.commute(a, x)) {
        centralizer_of_[a].push_back(x);
        pair_a_.push_back(a);
        pair_x_.push_back(x);
      }
    }
  }
  offset_.push_back(pair_a_.size());

  for (std::size_t c = 0; c < conj.num_classes(); ++c) {
    tables_.push_back(character_table(whole_->subgroup(conj.centralizers[c])));
    const auto& t = tables_.back();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const long dim = static_cast<long>(conj.classes[c].size()) * *t[i].degree().as_long();
      simples_.push_back(DoubleSimple{static_cast<int>(c), conj.reps[c], static_cast<int>(i), dim});
    }
  }
  for (std::size_t s = 0; s < simples_.size(); ++s) {
    const auto& simple = simples_[s];
    const ClassFunction& sigma = tables_[simple.class_index][simple.irrep];
    DoubleCharacter chi{std::vector<Cyclotomic>(pair_a_.size())};
    for (Elem b : conj.classes[simple.class_index]) {
      // x acts on V_b = t V_a through t^-1 x t in C(a).
      const Elem t = transversal_[b];
      const Elem tinv = g.inv(t);
      for (std::size_t p = offset_[b]; p < offset_[b + 1]; ++p) {
        chi.values[p] = sigma.at(g.conj(tinv, pair_x_[p]));
      }
    }
    characters_.push_back(std::move(chi));
  }
}

long DrinfeldDouble::pair_index(Elem a, Elem x) const {
  const auto& cent = centralizer_of_.at(a);
  auto it = std::lower_bound(cent.begin(), cent.end(), x);
  if (it == cent.end() || *it != x) return -1;
  return static_cast<long>(offset_[a] + (it - cent.begin()));
}

DoubleCharacter DrinfeldDouble::character(std::size_t simple) const { return characters_.at(simple); }

Cyclotomic DrinfeldDouble::pair_inner_product(const DoubleCharacter& a, const DoubleCharacter& b) const {
  Cyclotomic sum;
  for (std::size_t p = 0; p < pair_a_.size(); ++p) {
    if (a.values[p].is_zero() || b.values[p].is_zero()) continue;
    sum += a.values[p] * b.values[p].conj();
  }
  return sum / Cyclotomic(static_cast<long>(group_->order()));
}

DoubleCharacter DrinfeldDouble::tensor(const DoubleCharacter& a, const DoubleCharacter& b) const {
  const FiniteGroup& g = *group_;
  const std::size_t n = g.order();
  // Gradings supported by each factor.
  std::vector<Elem> sa, sb;
  for (Elem x = 0; x < n; ++x) {
    bool any_a = false, any_b = false;
    for (std::size_t p = offset_[x]; p < offset_[x + 1]; ++p) {
      any_a = any_a || !a.values[p].is_zero();
      any_b = any_b || !b.values[p].is_zero();
    }
    if (any_a) sa.push_back(x);
    if (any_b) sb.push_back(x);
  }
  DoubleCharacter out{std::vector<Cyclotomic>(pair_a_.size())};
  for (Elem u : sa) {
    for (Elem w : sb) {
      const Elem prod = g.mul(u, w);
      // x must stabilize both graded pieces: x in C(u) cap C(w).
      for (std::size_t p = offset_[u]; p < offset_[u + 1]; ++p) {
        const Elem x = pair_x_[p];
        if (!g.commute(x, w)) continue;
        const long q = pair_index(w, x);
        const long target = pair_index(prod, x);
        out.values[target] += a.values[p] * b.values[q];
      }
    }
  }
  return out;
}

ProductTable DrinfeldDouble::fusion_constants() const {
  ProductTable t;
  const std::size_t n = simples_.size();
  for (const auto& s : simples_) t.basis.push_back(BasisElement{s.class_index, s.rep, s.irrep, tables_[s.class_index][s.irrep].degree().as_long().value()});
  t.constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const DoubleCharacter prod = tensor(characters_[i], characters_[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const Cyclotomic m = pair_inner_product(prod, characters_[k]);
        auto v = m.as_long();
        if (!v || *v < 0) {
          throw ContractError("fusion multiplicity " + m.str() + " is not a nonnegative integer");
        }
        t.at(i, j, k) = *v;
      }
    }
  }
  return t;
}

}  // namespace orbik
