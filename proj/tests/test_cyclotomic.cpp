#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace orbik;
using orbik::testing::numeric;

namespace {

Cyclotomic E(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

Rational Q(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng) {
  static const int conductors[] = {1, 3, 4, 5, 8, 9, 12, 15};
  const int n = conductors[rng() % 8];
  Cyclotomic c;
  for (int i = 0; i < 3; ++i) {
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 4) + 1;
    c += Cyclotomic(Q(num, den)) * E(n, static_cast<long>(rng() % n));
  }
  return c;
}

bool close(std::complex<long double> a, std::complex<long double> b) { return std::abs(a - b) < 1e-9L; }

}  // namespace

TEST_SUITE("cyclo") {
  TEST_CASE("arithmetic examples") {
    CHECK(E(4, 2) + Cyclotomic(1L) == Cyclotomic(0L));
    CHECK((E(4, 2) + Cyclotomic(1L)).is_zero());
    CHECK(E(3) + E(3, 2) == Cyclotomic(-1L));
    const Cyclotomic inv = Cyclotomic(1L) / (Cyclotomic(1L) - E(3));
    CHECK(inv == (Cyclotomic(2L) + E(3)) / Cyclotomic(3L));
    CHECK(inv * (Cyclotomic(1L) - E(3)) == Cyclotomic(1L));
    CHECK(cyclo::arith(E(4), E(4), "mul") == Cyclotomic(-1L));
    CHECK_THROWS(Cyclotomic(1L) / Cyclotomic(0L));
    CHECK_THROWS(cyclo::arith(E(3), Cyclotomic(0L), "div"));
  }

  TEST_CASE("galois twist examples") {
    CHECK(E(3).galois(-1) == E(3, 2));
    CHECK(Cyclotomic(Q(5, 2)).galois(7) == Cyclotomic(Q(5, 2)));
    const Cyclotomic a = E(8) + E(8, -1);
    CHECK(a.galois(3) == E(8, 3) + E(8, -3));
    CHECK(a.galois(3) == -a);
    CHECK_THROWS_AS(E(3).galois(3), ContractError);
  }

  TEST_CASE("as_integer examples") {
    CHECK((E(3) + E(3, 2) + Cyclotomic(1L)).as_integer() == Integer(0));
    CHECK(Cyclotomic(Q(6, 1)).as_integer() == Integer(6));
    CHECK_FALSE(E(5).as_integer().has_value());
    CHECK_FALSE(Cyclotomic(Q(1, 2)).as_integer().has_value());
  }

  TEST_CASE("conductor is minimal") {
    CHECK(E(6, 2).conductor() == 3);
    CHECK(E(12, 4).conductor() == 3);
    CHECK((E(8) + E(8, 3)).conductor() == 8);  // sqrt(-2)
    CHECK((E(8) * E(8)).conductor() == 4);
    CHECK((E(5) + E(5, 4)).conductor() == 5);
    CHECK((E(7) * E(7, 6)).conductor() == 1);
    // -1 as a root of unity of order 2 descends to Q.
    CHECK(E(2).conductor() == 1);
    CHECK(E(2) == Cyclotomic(-1L));
  }

  TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 150; ++trial) {
      const Cyclotomic a = random_cyclotomic(rng), b = random_cyclotomic(rng), c = random_cyclotomic(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
      CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
      if (!b.is_zero()) {
        CHECK((a / b) * b == a);
        CHECK(close(numeric(a / b), numeric(a) / numeric(b)));
      }
    }
  }

  TEST_CASE("galois twist is a homomorphism and composes") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
      const Cyclotomic a = random_cyclotomic(rng), b = random_cyclotomic(rng);
      const long n = cyclo::lcm(std::max(1, a.conductor()), std::max(1, b.conductor())) * 120;
      for (long k : {1L, 7L, -1L, 11L, 13L}) {
        if (cyclo::gcd(k, n) != 1) continue;
        CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        for (long m : {-1L, 7L, 17L}) CHECK(a.galois(k).galois(m) == a.galois(((k * m) % n + n) % n));
      }
      CHECK(close(numeric(a.conj()), std::conj(numeric(a))));
    }
  }

  TEST_CASE("embedding round trip") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const Cyclotomic a = random_cyclotomic(rng);
      // Multiplying by E(N)^N = 1 forces arithmetic at conductor lcm(n, N).
      for (int big : {24, 40, 45, 60}) {
        const Cyclotomic lifted = a * E(big, big) + E(big) - E(big);
        CHECK(lifted == a);
        CHECK(lifted.conductor() == a.conductor());
        CHECK(lifted.coeffs() == a.coeffs());
      }
    }
  }

  TEST_CASE("parse and print round trip") {
    CHECK(Cyclotomic::parse("E(3)+E(3)^2") == Cyclotomic(-1L));
    CHECK(Cyclotomic::parse("1/2 - 3/4*E(8)^3") == Cyclotomic(Q(1, 2)) - Cyclotomic(Q(3, 4)) * E(8, 3));
    CHECK(Cyclotomic::parse("(1+E(4))^2") == Cyclotomic(2L) * E(4));
    CHECK(Cyclotomic::parse("E(5)^-1") == E(5, 4));
    CHECK(Cyclotomic::parse("-7") == Cyclotomic(-7L));
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
      const Cyclotomic a = random_cyclotomic(rng);
      CHECK(Cyclotomic::parse(a.str()) == a);
    }
    CHECK_THROWS_AS(Cyclotomic::parse("E(3"), ParseError);
    CHECK_THROWS_AS(Cyclotomic::parse("2 +"), ParseError);
    CHECK_THROWS_AS(Cyclotomic::parse("E(0)"), ParseError);
    CHECK_THROWS_AS(Cyclotomic::parse("1/0"), ParseError);
  }

  TEST_CASE("canonical order puts 1 first among roots of unity") {
    CHECK(canonical_compare(Cyclotomic(1L), E(3)) < 0);
    CHECK(canonical_compare(E(3), E(3, 2)) < 0);
    CHECK(canonical_compare(E(3), E(3)) == 0);
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclo::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclo::cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclo::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    const auto& p105 = cyclo::cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(std::find(p105.begin(), p105.end(), -2) != p105.end());  // first coefficient outside {-1,0,1}
    CHECK(cyclo::euler_phi(105) == 48);
  }
}
