#include <doctest.h>

#include "orbik/inertia.hpp"
#include "support.hpp"

using namespace orbik;
using namespace orbik::testing;

namespace {

ClassFunction cf(const SubgroupPtr& h, std::vector<long> v) {
  std::vector<Cyclotomic> vals(v.begin(), v.end());
  return ClassFunction(h, vals);
}

struct Case {
  const char* group;
  std::vector<std::string> reps;
};

const Case kCorpus[] = {
    {"Z2", {"sign"}},        {"Z3", {"irrep:1"}},     {"Z4", {"irrep:2"}},       {"S3", {"standard"}},
    {"S3", {"regular"}},     {"Q8", {"irrep:4"}},     {"D4", {"irrep:4"}},       {"D4", {"regular"}},
    {"S4", {"standard"}},    {"Z6", {"regular"}},     {"S3", {"sign", "standard"}}, {"trivial", {"trivial", "trivial"}},
};

}  // namespace

TEST_SUITE("inertia") {
  TEST_CASE("sector examples") {
    const auto z2 = Subgroup::whole(make_group("Z2"));
    const auto sign = representation_from_spec(z2, "sign");
    const auto secs = sectors(z2, GRep::make(sign));
    REQUIRE(secs.size() == 2);
    CHECK(secs[0].fixed_char == sign);
    CHECK(secs[1].fixed_char.is_zero());

    const auto s3 = Subgroup::whole(make_group("S3"));
    for (const auto& s : sectors(s3, GRep::zero(s3))) CHECK(s.fixed_char.is_zero());
    std::vector<long> dims;
    for (const auto& s : sectors(s3, GRep::make(representation_from_spec(s3, "standard")))) dims.push_back(s.fixed_dimension());
    CHECK(dims == std::vector<long>{2, 1, 0});
    CHECK_THROWS_AS(GRep::make(cf(s3, {0, 1, 1}) - cf(s3, {1, 1, 1})), ContractError);
  }

  TEST_CASE("pair sector examples") {
    const auto z2 = Subgroup::whole(make_group("Z2"));
    const auto v = GRep::make(representation_from_spec(z2, "sign"));
    const auto secs = sectors(z2, v);
    const auto at_e = pair_sector_data(z2, v, secs, 0);
    REQUIRE(at_e.size() == 2);
    for (const auto& p : at_e) {
      if (p.g == 0) {
        CHECK(p.B.is_zero());
        CHECK(p.N.is_zero());
        CHECK(derived_class_D(p) == ClassFunction::trivial(p.stabilizer));
        // E_P = s + s, so lambda_{-1} is (1 - s)^2 with values (0, 4).
        CHECK(pants_class(p) == cf(p.stabilizer, {0, 4}));
      } else {
        CHECK(p.g == 1);
        CHECK(p.h == 1);
        CHECK(p.B == v.character);
        CHECK(p.N == v.character);
        CHECK(derived_class_D(p) == cf(p.stabilizer, {0, 2}));
        CHECK(pants_class(p) == cf(p.stabilizer, {0, 2}));
      }
    }

    const auto s3g = make_group("S3");
    const auto s3 = Subgroup::whole(s3g);
    const auto std2 = GRep::make(representation_from_spec(s3, "standard"));
    const auto s3secs = sectors(s3, std2);
    const Elem c123 = find_perm(*s3g, {1, 2, 0});
    const Elem c132 = s3g->mul(c123, c123);
    // Over a 3-cycle target k the only pair of 3-cycles is (k^2, k^2).
    const int k_class = s3->class_of(c132);
    bool found = false;
    for (const auto& p : pair_sector_data(s3, std2, s3secs, k_class)) {
      if (s3->class_of(p.g) != k_class || s3->class_of(p.h) != k_class) continue;
      found = true;
      REQUIRE(p.stabilizer->order() == 3);
      CHECK(p.B.at(0) == Cyclotomic(2L));
      CHECK(p.B.at(p.g) == Cyclotomic(-1L));
      CHECK(p.B.at(p.h) == Cyclotomic(-1L));
      CHECK(p.N.is_zero());
      const auto d = derived_class_D(p);
      CHECK(d.at(0) == Cyclotomic(0L));
      CHECK(d.at(p.g) == Cyclotomic(3L));
      CHECK(d.at(p.h) == Cyclotomic(3L));
      const auto t = character_table(p.stabilizer);
      CHECK(d == ClassFunction::trivial(p.stabilizer) * Cyclotomic(2L) - t[1] - t[2]);
    }
    CHECK(found);

    const auto s3z = GRep::zero(s3);
    for (int k = 0; k < 3; ++k)
      for (const auto& p : pair_sector_data(s3, s3z, sectors(s3, s3z), k)) CHECK(pants_class(p) == ClassFunction::trivial(p.stabilizer));
  }

  TEST_CASE("pair sector invariants on the corpus") {
    for (const auto& c : kCorpus) {
      const std::string label = c.group;
      CAPTURE(label);
      const auto g = make_group(c.group);
      const auto whole = Subgroup::whole(g);
      const auto v = GRep::make(representation_from_specs(whole, c.reps));
      const auto secs = sectors(whole, v);
      for (const auto& s : secs) {
        CHECK(is_honest(s.fixed_char));
        CHECK(s.fixed_dimension() <= v.dimension());
        CHECK(molien_check(v.character, s.rep, s.centralizer, 10));
      }
      const auto& conj = whole->conjugacy();
      for (std::size_t k = 0; k < secs.size(); ++k) {
        std::size_t covered = 0;
        for (const auto& p : pair_sector_data(whole, v, secs, static_cast<int>(k))) {
          covered += p.orbit_size;
          const auto t = character_table(p.stabilizer);
          CHECK(t.is_honest(p.B));
          CHECK(t.is_honest(p.E_P));
          CHECK(t.is_honest(p.N));
          CHECK(p.B == p.excess);
          CHECK(p.B + p.N == p.v_on_z + p.vk_on_z - p.vg_on_z - p.vh_on_z);
          CHECK(*p.B.degree().as_long() ==
                v.dimension() + *p.fixed_gh.degree().as_long() - *p.vg_on_z.degree().as_long() - *p.vh_on_z.degree().as_long());
          CHECK(*p.B.degree().as_long() >= 0);

          // The sector character of [g] carried to g agrees with the fixed
          // space of g computed directly on Z.
          const Elem just_g[] = {p.g};
          CHECK(p.vg_on_z == fixed_subspace_character(v.character, just_g, p.stabilizer));
          const Elem just_h[] = {p.h};
          CHECK(p.vh_on_z == fixed_subspace_character(v.character, just_h, p.stabilizer));

          // Commuting pairs: (h, g) is a pair over the same target with the
          // same stabilizer, and B is symmetric.
          if (g->commute(p.g, p.h)) {
            const Elem hg[] = {p.h, p.g};
            CHECK(fixed_subspace_character(v.character, hg, p.stabilizer) == p.fixed_gh);
            const auto swapped = p.v_on_z + p.fixed_gh - p.vh_on_z - p.vg_on_z;
            CHECK(swapped == p.B);
          }
          CHECK(conj.class_of[p.k] == static_cast<int>(k));
        }
        CHECK(covered == g->order());
      }
    }
  }

  TEST_CASE("fixed space of a pair ignores the order of its generators") {
    const auto g = make_group("S4");
    const auto whole = Subgroup::whole(g);
    const auto v = GRep::make(representation_from_spec(whole, "standard"));
    const auto secs = sectors(whole, v);
    for (std::size_t k = 0; k < secs.size(); ++k)
      for (const auto& p : pair_sector_data(whole, v, secs, static_cast<int>(k))) {
        const Elem pair[] = {p.g, p.h};
        const Elem flipped[] = {p.h, p.g};
        CHECK(fixed_subspace_character(v.character, pair, p.stabilizer) ==
              fixed_subspace_character(v.character, flipped, p.stabilizer));
      }
  }

  TEST_CASE("seeded pair data keeps the invariants") {
    const auto g = make_group("D4");
    for (std::uint64_t seed : {5u, 6u}) {
      const auto whole = Subgroup::whole(g, ConjugacyOptions{seed});
      const auto v = GRep::make(representation_from_spec(whole, "regular"));
      const auto secs = sectors(whole, v);
      for (std::size_t k = 0; k < secs.size(); ++k)
        for (const auto& p : pair_sector_data(whole, v, secs, static_cast<int>(k), ConjugacyOptions{seed})) {
          CHECK(p.B == p.excess);
          CHECK(g->mul(p.g, p.h) == p.k);
        }
    }
  }
}
