#include "orbik/builtin.hpp"

#include <cctype>
#include <numeric>
#include <string>

namespace orbik {

FiniteGroup cyclic_group(int n) {
  if (n < 1 || static_cast<std::size_t>(n) > kMaxGroupOrder) throw ParseError("cyclic group order out of range");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_cayley(t);
}

FiniteGroup dihedral_group(int n) {
  if (n < 1 || static_cast<std::size_t>(2 * n) > kMaxGroupOrder) throw ParseError("dihedral group degree out of range");
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b + d)
  for (int x = 0; x < order; ++x) {
    const int a = x % n, b = x / n;
    for (int y = 0; y < order; ++y) {
      const int c = y % n, d = y / n;
      const int rot = ((a + (b ? -c : c)) % n + n) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  }
  return FiniteGroup::from_cayley(t);
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw ParseError("symmetric group degree must lie in 1..5");
  std::vector<std::vector<std::vector<int>>> gens;
  if (n >= 2) gens.push_back({{1, 2}});
  if (n >= 3) {
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 1);
    gens.push_back({cycle});
  }
  return FiniteGroup::from_cycles(n, gens);
}

FiniteGroup quaternion_group() {
  // index = 2 * unit + sign, unit in {1, i, j, k}
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2 + y % 2 + sign_mul[u][v]) % 2;
      t[x][y] = 2 * unit_mul[u][v] + s;
    }
  return FiniteGroup::from_cayley(t);
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 6) throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

FiniteGroup builtin_group(std::string_view name) {
  if (name == "trivial") return cyclic_group(1);
  if (name == "quaternion8" || name == "Q8") return quaternion_group();
  auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const auto kind = name.substr(0, colon);
    const int n = parse_int(name.substr(colon + 1), "group parameter");
    if (kind == "cyclic") return cyclic_group(n);
    if (kind == "dihedral") return dihedral_group(n);
    if (kind == "symmetric") return symmetric_group(n);
  } else if (name.size() >= 2) {
    const int n = parse_int(name.substr(1), "group parameter");
    switch (name[0]) {
      case 'Z': return cyclic_group(n);
      case 'D': return dihedral_group(n);
      case 'S': return symmetric_group(n);
      default: break;
    }
  }
  throw ParseError("unknown builtin group '" + std::string(name) + "'");
}

namespace {

ClassFunction permutation_character(const SubgroupPtr& group) {
  const FiniteGroup& g = group->ambient();
  if (!g.has_permutations()) throw ParseError("group has no permutation action");
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < group->num_classes(); ++c) {
    const auto& p = g.permutation(group->rep(static_cast<int>(c)));
    long fixed = 0;
    for (std::size_t i = 0; i < p.size(); ++i) fixed += p[i] == static_cast<int>(i);
    v.emplace_back(fixed);
  }
  return ClassFunction(group, std::move(v));
}

ClassFunction sign_character(const SubgroupPtr& group) {
  const FiniteGroup& g = group->ambient();
  if (g.has_permutations()) {
    std::vector<Cyclotomic> v;
    for (std::size_t c = 0; c < group->num_classes(); ++c) {
      const auto& p = g.permutation(group->rep(static_cast<int>(c)));
      std::vector<char> seen(p.size(), 0);
      long parity = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
          seen[j] = 1;
          ++len;
        }
        parity += len - 1;
      }
      v.emplace_back(parity % 2 == 0 ? 1L : -1L);
    }
    return ClassFunction(group, std::move(v));
  }
  const auto table = character_table(group);
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& chi = table[i];
    if (chi.degree() != Cyclotomic(1L)) break;
    bool pm = true;
    for (const auto& x : chi.values()) pm = pm && (x == Cyclotomic(1L) || x == Cyclotomic(-1L));
    if (pm) return chi;
  }
  throw ParseError("group has no nontrivial sign-type linear character");
}

}  // namespace

ClassFunction representation_from_spec(const SubgroupPtr& group, std::string_view spec) {
  const std::size_t r = group->num_classes();
  if (spec == "zero") return ClassFunction::zero(group);
  if (spec == "trivial") return ClassFunction::trivial(group);
  if (spec == "regular") {
    std::vector<Cyclotomic> v(r);
    v[0] = Cyclotomic(static_cast<long>(group->order()));
    return ClassFunction(group, std::move(v));
  }
  if (spec == "sign") return sign_character(group);
  if (spec == "permutation") return permutation_character(group);
  if (spec == "standard") return permutation_character(group) - ClassFunction::trivial(group);
  if (spec.starts_with("irrep:")) {
    const int i = parse_int(spec.substr(6), "irreducible index");
    const auto table = character_table(group);
    if (static_cast<std::size_t>(i) >= table.size()) throw ParseError("irreducible index out of range");
    return table[i];
  }
  if (spec.starts_with("chars:")) {
    std::vector<Cyclotomic> v;
    std::string_view rest = spec.substr(6);
    while (true) {
      const auto comma = rest.find(',');
      v.push_back(Cyclotomic::parse(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (v.size() != r) {
      throw ParseError("character has " + std::to_string(v.size()) + " values; the group has " + std::to_string(r) +
                       " classes");
    }
    return ClassFunction(group, std::move(v));
  }
  throw ParseError("unknown representation spec '" + std::string(spec) + "'");
}

ClassFunction representation_from_specs(const SubgroupPtr& group, const std::vector<std::string>& specs) {
  ClassFunction sum = ClassFunction::zero(group);
  for (const auto& s : specs) sum += representation_from_spec(group, s);
  return sum;
}

}  // namespace orbik
