#include <doctest.h>

#include "orbik/drinfeld.hpp"
#include "orbik/inertial_product.hpp"
#include "support.hpp"

using namespace orbik;
using namespace orbik::testing;

TEST_SUITE("drinfeld") {
  TEST_CASE("simple counts") {
    CHECK(DrinfeldDouble(make_group("Z2")).simples().size() == 4);
    CHECK(DrinfeldDouble(make_group("S3")).simples().size() == 8);
    CHECK(DrinfeldDouble(make_group("D4")).simples().size() == 22);
    CHECK(DrinfeldDouble(make_group("Q8")).simples().size() == 22);
    CHECK(DrinfeldDouble(make_group("trivial")).simples().size() == 1);
  }

  TEST_CASE("character examples") {
    const auto g = make_group("S3");
    const DrinfeldDouble d(g);
    const auto unit = d.character(0);
    for (Elem a = 0; a < g->order(); ++a)
      for (Elem x = 0; x < g->order(); ++x) {
        const long p = d.pair_index(a, x);
        if (p < 0) continue;
        CHECK(unit.values[p] == Cyclotomic(a == 0 ? 1L : 0L));
      }

    const Elem t12 = find_perm(*g, {1, 0, 2});
    // ([(12)], sign of C((12))): value at ((12), (12)) is -1.
    bool found = false;
    for (std::size_t s = 0; s < d.simples().size(); ++s) {
      const auto& simple = d.simples()[s];
      if (simple.rep != t12 || simple.irrep != 1) continue;
      found = true;
      CHECK(d.character(s).values[d.pair_index(t12, t12)] == Cyclotomic(-1L));
      CHECK(simple.dimension == 3);
    }
    CHECK(found);

    const auto z4 = make_group("Z4");
    const DrinfeldDouble dz(z4);
    const auto whole = Subgroup::whole(z4);
    const auto table = character_table(whole);
    for (std::size_t s = 0; s < dz.simples().size(); ++s) {
      const auto& simple = dz.simples()[s];
      const auto chi = dz.character(s);
      for (Elem b = 0; b < 4; ++b)
        for (Elem x = 0; x < 4; ++x) {
          const Cyclotomic expect = b == simple.rep ? table[simple.irrep].at(x) : Cyclotomic(0L);
          CHECK(chi.values[dz.pair_index(b, x)] == expect);
        }
    }
  }

  TEST_CASE("fusion examples") {
    const auto t = DrinfeldDouble(make_group("Z2")).fusion_constants();
    // Basis: ([e],1), ([e],s), ([sigma],1), ([sigma],s).
    CHECK(t.at(3, 3, 0) == 1);
    for (std::size_t k = 1; k < 4; ++k) CHECK(t.at(3, 3, k) == 0);
    for (const char* name : {"S3", "Q8"}) {
      const auto f = DrinfeldDouble(make_group(name)).fusion_constants();
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t k = 0; k < f.size(); ++k) CHECK(f.at(0, i, k) == (i == k ? 1 : 0));
    }
  }

  TEST_CASE("invariants") {
    for (const char* name : {"Z2", "Z3", "Z4", "S3", "D4", "Q8", "D5"}) {
      const std::string label = name;
      CAPTURE(label);
      const auto g = make_group(name);
      const DrinfeldDouble d(g);
      const auto whole = Subgroup::whole(g);
      CHECK(d.num_commuting_pairs() == g->order() * whole->num_classes());
      const std::size_t n = d.simples().size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(d.pair_inner_product(d.character(i), d.character(j)) == Cyclotomic(i == j ? 1L : 0L));
      const auto f = d.fusion_constants();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          long dim = 0;
          for (std::size_t k = 0; k < n; ++k) {
            CHECK(f.at(i, j, k) >= 0);
            dim += f.at(i, j, k) * d.simples()[k].dimension;
          }
          CHECK(dim == d.simples()[i].dimension * d.simples()[j].dimension);
        }
      CHECK(ring_property_check(f).passed());
    }
  }

  TEST_CASE("transversal independence") {
    for (const char* name : {"S3", "D4", "Q8"}) {
      const auto g = make_group(name);
      const auto base = DrinfeldDouble(g).fusion_constants();
      for (std::uint64_t seed : {3u, 8u, 21u}) {
        const auto t = DrinfeldDouble(g, ConjugacyOptions{seed}).fusion_constants();
        CHECK(compare_tables(base, t).identical());
      }
    }
  }

  TEST_CASE("agrees with the virtual product at V = 0") {
    for (const char* name : {"Z2", "Z3", "S3", "D5"}) {
      const auto g = make_group(name);
      const auto virt = InertialProduct(g, ClassFunction::zero(Subgroup::whole(g))).product_table();
      const auto fusion = DrinfeldDouble(g).fusion_constants();
      CHECK(compare_tables(virt, fusion).identical());
    }
  }
}
