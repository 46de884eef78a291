#include "orbik/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace orbik {
namespace cyclo {

int gcd(long a, long b) { return static_cast<int>(std::gcd(a, b)); }
long lcm(long a, long b) { return std::lcm(a, b); }

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int euler_phi(int n) {
  int result = n;
  for (int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

namespace {

// Per-conductor data: Phi_n and the residues of x^m for 0 <= m < span.
struct Field {
  int n = 1;
  int phi = 1;
  std::vector<std::int64_t> poly;
  int span = 0;
  std::vector<std::int64_t> xpow;  // row-major span x phi

  const std::int64_t* power(int m) const { return xpow.data() + static_cast<std::size_t>(m) * phi; }
};

std::vector<std::int64_t> compute_phi_poly(int n, const std::map<int, std::vector<std::int64_t>>& known);

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<std::int64_t>>& poly_cache() {
  static std::map<int, std::vector<std::int64_t>> cache;
  return cache;
}

std::map<int, std::shared_ptr<const Field>>& field_cache() {
  static std::map<int, std::shared_ptr<const Field>> cache;
  return cache;
}

// Exact division of a by the monic polynomial b, integer coefficients.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw ContractError("cyclotomic polynomial division is not exact");
  }
  return q;
}

// Caller holds the cache mutex.
const std::vector<std::int64_t>& phi_poly_locked(int n) {
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), phi_poly_locked(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

std::shared_ptr<const Field> field(int n) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& cache = field_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  auto f = std::make_shared<Field>();
  f->n = n;
  f->poly = phi_poly_locked(n);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  f->span = std::max(n, 2 * f->phi);
  f->xpow.assign(static_cast<std::size_t>(f->span) * f->phi, 0);
  const int phi = f->phi;
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  if (phi == 0) throw ContractError("degenerate cyclotomic field");
  for (int m = 0; m < f->span; ++m) {
    std::copy(cur.begin(), cur.end(), f->xpow.begin() + static_cast<std::ptrdiff_t>(m) * phi);
    // multiply by x and reduce
    const std::int64_t top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) {
        __int128 v = static_cast<__int128>(cur[i]) - static_cast<__int128>(top) * f->poly[i];
        if (v > INT64_MAX || v < INT64_MIN) throw ContractError("cyclotomic power table overflow");
        cur[i] = static_cast<std::int64_t>(v);
      }
    }
  }
  cache.emplace(n, f);
  return f;
}

std::vector<Rational> trimmed(std::vector<Rational> p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

int degree(const std::vector<Rational>& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

// Long division in Q[x]; returns (quotient, remainder).
std::pair<std::vector<Rational>, std::vector<Rational>> divmod(std::vector<Rational> a,
                                                                const std::vector<Rational>& b) {
  const int db = degree(b);
  const int da = degree(a);
  if (da < db) return {{Rational(0)}, trimmed(std::move(a))};
  std::vector<Rational> q(da - db + 1, 0);
  const Rational& lead = b[db];
  for (int i = da; i >= db; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i] / lead;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(std::max(db, 1));
  return {trimmed(std::move(q)), trimmed(std::move(a))};
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Residue of sum_m p[m] x^m modulo Phi_n, for p of length <= span.
std::vector<Rational> reduce_with(const Field& f, const std::vector<Rational>& p) {
  std::vector<Rational> out(f.phi, 0);
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] == 0) continue;
    if (static_cast<int>(m) < f.phi) {
      out[m] += p[m];
      continue;
    }
    const std::int64_t* row = f.power(static_cast<int>(m));
    for (int i = 0; i < f.phi; ++i) {
      if (row[i] != 0) out[i] += p[m] * Rational(static_cast<long>(row[i]));
    }
  }
  return out;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Inverse of a modulo m, gcd(a, m) = 1.
long inverse_mod(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = mod(a, m);
  while (new_r != 0) {
    long q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return mod(t, m);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  return field(n)->poly;
}

Cyclotomic arith(const Cyclotomic& a, const Cyclotomic& b, std::string_view op) {
  if (op == "add") return a + b;
  if (op == "sub") return a - b;
  if (op == "mul") return a * b;
  if (op == "div") return a / b;
  throw std::invalid_argument("unknown cyclotomic operation: " + std::string(op));
}

}  // namespace cyclo

using namespace cyclo;

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  std::vector<Rational> p(n, 0);
  p[mod(k, n)] = 1;
  return from_powers(n, p);
}

Cyclotomic Cyclotomic::from_powers(int n, const std::vector<Rational>& coeffs) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  auto f = field(n);
  std::vector<Rational> folded(n, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % n] += coeffs[i];
  Cyclotomic out(n, reduce_with(*f, folded));
  out.reduce();
  return out;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

std::optional<Integer> Cyclotomic::as_integer() const {
  if (conductor_ != 1 || coeffs_[0].get_den() != 1) return std::nullopt;
  return coeffs_[0].get_num();
}

std::optional<long> Cyclotomic::as_long() const {
  auto v = as_integer();
  if (!v || !v->fits_slong_p()) return std::nullopt;
  return v->get_si();
}

std::vector<Rational> Cyclotomic::embedded(int target) const {
  if (target == conductor_) return coeffs_;
  auto f = field(target);
  const int step = target / conductor_;
  std::vector<Rational> p(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return reduce_with(*f, p);
}

bool Cyclotomic::try_descend(int q) {
  const int n = conductor_;
  const int d = n / q;
  const int phi = static_cast<int>(coeffs_.size());
  if (d % q == 0) {
    // Phi_n(x) = Phi_d(x^q): Q(E(d)) is spanned by the powers x^(jq).
    for (int i = 0; i < phi; ++i) {
      if (i % q != 0 && coeffs_[i] != 0) return false;
    }
    std::vector<Rational> c(phi / q);
    for (int j = 0; j < phi / q; ++j) c[j] = coeffs_[j * q];
    conductor_ = d;
    coeffs_ = std::move(c);
    return true;
  }
  // Q(E(n)) = Q(E(d)) (x) Q(E(q)) with basis E(d)^i E(q)^j, 0 <= j < q-1.
  // E(n) = E(d)^a E(q)^b with a q + b d = 1 (mod n).
  const long a = inverse_mod(q, d);
  const long b = inverse_mod(d, q);
  auto fd = field(d);
  const int phid = fd->phi;
  const int w = q - 1;
  std::vector<Rational> t(static_cast<std::size_t>(phid) * w, 0);
  auto add_term = [&](int ey, int ew, const Rational& c) {
    const std::int64_t* row = fd->power(ey);
    auto add_w = [&](int e, const Rational& s) {
      for (int i = 0; i < phid; ++i) {
        if (row[i] != 0) t[static_cast<std::size_t>(i) * w + e] += s * Rational(static_cast<long>(row[i]));
      }
    };
    if (ew < w) {
      add_w(ew, c);
    } else {
      for (int e = 0; e < w; ++e) add_w(e, -c);
    }
  };
  for (int i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    add_term(static_cast<int>(mod(a * i, d)), static_cast<int>(mod(b * i, q)), coeffs_[i]);
  }
  for (int i = 0; i < phid; ++i) {
    for (int e = 1; e < w; ++e) {
      if (t[static_cast<std::size_t>(i) * w + e] != 0) return false;
    }
  }
  std::vector<Rational> c(phid);
  for (int i = 0; i < phid; ++i) c[i] = t[static_cast<std::size_t>(i) * w];
  conductor_ = d;
  coeffs_ = std::move(c);
  return true;
}

void Cyclotomic::reduce() {
  for (auto& c : coeffs_) c.canonicalize();
  bool changed = true;
  while (changed && conductor_ > 1) {
    changed = false;
    if (std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; })) {
      coeffs_.resize(1);
      conductor_ = 1;
      return;
    }
    for (int q : prime_factors(conductor_)) {
      if (try_descend(q)) {
        changed = true;
        break;
      }
    }
  }
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (conductor_ == 1) return *this;
  const int n = conductor_;
  if (gcd(mod(k, n), n) != 1) {
    throw ContractError("Galois twist exponent " + std::to_string(k) + " is not coprime to conductor " +
                        std::to_string(n));
  }
  std::vector<Rational> p(n, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[mod(static_cast<long>(i) * k, n)] += coeffs_[i];
  Cyclotomic out(n, reduce_with(*field(n), p));
  out.reduce();
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (conductor_ == other.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  } else {
    const int target = static_cast<int>(lcm(conductor_, other.conductor_));
    auto lhs = embedded(target);
    auto rhs = other.embedded(target);
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += rhs[i];
    conductor_ = target;
    coeffs_ = std::move(lhs);
  }
  reduce();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor_ == 1) {
    if (other.coeffs_[0] == 1) return *this;
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    reduce();
    return *this;
  }
  if (conductor_ == 1) {
    const Rational s = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= s;
    reduce();
    return *this;
  }
  const int target = static_cast<int>(lcm(conductor_, other.conductor_));
  auto f = field(target);
  auto prod = poly_mul(embedded(target), other.embedded(target));
  conductor_ = target;
  coeffs_ = reduce_with(*f, prod);
  reduce();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (conductor_ == 1) return Cyclotomic(1 / coeffs_[0]);
  const auto& phi = cyclotomic_polynomial(conductor_);
  std::vector<Rational> r0(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(static_cast<long>(phi[i]));
  std::vector<Rational> r1 = trimmed(coeffs_);
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  while (degree(r1) > 0) {
    auto [q, r] = divmod(r0, r1);
    auto qs = poly_mul(q, s1);
    std::vector<Rational> next(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) next[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) next[i] -= qs[i];
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = trimmed(std::move(next));
  }
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return from_powers(conductor_, s1);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

std::strong_ordering canonical_compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ <=> b.conductor_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c > 0) return std::strong_ordering::less;
    if (c < 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::str() const {
  std::string out;
  const std::string root = "E(" + std::to_string(conductor_) + ")";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      const std::string power = i == 1 ? root : root + "^" + std::to_string(i);
      if (c == 1) {
        term = power;
      } else if (c == -1) {
        term = "-" + power;
      } else {
        term = c.get_str() + "*" + power;
      }
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (('*'|'/') power)*
// power  := atom ['^' ['-'] integer]
// atom   := integer | 'E' '(' integer ')' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Cyclotomic parse() {
    Cyclotomic v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cyclotomic syntax error at offset " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "': " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Cyclotomic expr() {
    Cyclotomic v;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    v = term();
    if (negate) v = -v;
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Cyclotomic term() {
    Cyclotomic v = power();
    for (;;) {
      if (accept('*')) {
        v *= power();
      } else if (accept('/')) {
        Cyclotomic d = power();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Cyclotomic power() {
    Cyclotomic base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    Integer e = integer();
    if (!e.fits_slong_p()) fail("exponent too large");
    long k = e.get_si();
    if (negative) {
      if (base.is_zero()) fail("zero to a negative power");
      base = base.inverse();
    }
    Cyclotomic out(1L);
    for (; k > 0; --k) out *= base;
    return out;
  }

  Cyclotomic atom() {
    skip();
    if (accept('(')) {
      Cyclotomic v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (accept('E')) {
      if (!accept('(')) fail("expected '(' after E");
      Integer n = integer();
      if (!accept(')')) fail("expected ')'");
      if (n < 1 || !n.fits_sint_p()) fail("root of unity order out of range");
      return Cyclotomic::root_of_unity(static_cast<int>(n.get_si()), 1);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Cyclotomic(integer());
    fail("expected a number, E(n) or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace orbik
