#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbik {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown for malformed textual input (cyclotomic syntax, group files, specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a mathematical precondition or postcondition fails.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
  An exact element of the cyclotomic field Q(E(n)).

  The value is stored as the coefficient vector of its residue modulo the
  cyclotomic polynomial Phi_n, so the representation at a fixed conductor is
  unique.  Every operation ends with a descent step that moves the value to
  the smallest conductor containing it; two values are equal iff their
  (conductor, coefficients) agree.  Conductors are never 2 mod 4.
*/
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}  // NOLINT
  Cyclotomic(const Rational& value);                                  // NOLINT
  Cyclotomic(const Integer& value) : Cyclotomic(Rational(value)) {}    // NOLINT

  /// E(n)^k.
  static Cyclotomic root_of_unity(int n, long k = 1);

  /// Builds sum_i coeffs[i] * E(n)^i; coeffs may be longer than phi(n).
  static Cyclotomic from_powers(int n, const std::vector<Rational>& coeffs);

  static Cyclotomic parse(std::string_view text);

  int conductor() const { return conductor_; }
  /// Coefficients in the basis 1, E(n), ..., E(n)^(phi(n)-1).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;
  std::optional<long> as_long() const;

  /// Image under E(n) -> E(n)^k.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Deterministic total order: conductor ascending, then coefficient
  /// vectors compared lexicographically in descending order.  Among
  /// rationals this is the reverse numeric order, so 1 sorts first.
  friend std::strong_ordering canonical_compare(const Cyclotomic& a,
                                                const Cyclotomic& b);

  std::string str() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  void reduce();
  bool try_descend(int prime);
  std::vector<Rational> embedded(int target) const;

  int conductor_;
  std::vector<Rational> coeffs_;
};

inline bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

namespace cyclo {

int euler_phi(int n);
int gcd(long a, long b);
long lcm(long a, long b);
std::vector<int> prime_factors(int n);

/// Integer coefficients of Phi_n, constant term first; leading coefficient 1.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// add, sub, mul or div by name, with conductor reconciliation.
Cyclotomic arith(const Cyclotomic& a, const Cyclotomic& b, std::string_view op);

}  // namespace cyclo
}  // namespace orbik
