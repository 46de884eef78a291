#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbik {

using Elem = std::uint32_t;

/// A permutation of {0, ..., degree-1}; image[i] is the image of point i.
using Permutation = std::vector<int>;

/// Hard cap on group order: every algorithm here enumerates elements.
inline constexpr std::size_t kMaxGroupOrder = 4096;

/*
  A finite group stored by its full Cayley table.  Elements are the indices
  0 .. order-1 and the identity is always index 0.  Groups built from
  permutations keep the permutation of each element so that natural
  characters (sign, permutation character) can be read off.
*/
class FiniteGroup {
 public:
  /// Validates the table: square, entries in range, identity at index 0,
  /// Latin square, associative.
  static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table);

  /// Closure of the generators under composition.  Elements are numbered in
  /// breadth-first order from the identity.  An empty generator list gives
  /// the trivial group.
  static FiniteGroup from_permutations(int degree, const std::vector<Permutation>& generators);

  /// Parses cycle notation: each generator is a list of cycles over the
  /// points 1..degree.
  static FiniteGroup from_cycles(int degree, const std::vector<std::vector<std::vector<int>>>& generators);

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem t, Elem x) const { return mul(mul(t, x), inv(t)); }  // t x t^-1
  Elem power(Elem a, long k) const;
  int elem_order(Elem a) const { return orders_[a]; }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  int exponent() const;

  bool has_permutations() const { return !perms_.empty(); }
  int degree() const { return degree_; }
  const Permutation& permutation(Elem a) const { return perms_.at(a); }

  /// Closure of elems under multiplication and inverse, sorted.
  std::vector<Elem> generated_subgroup(std::span<const Elem> elems) const;

  std::vector<Elem> all_elements() const;

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
  int degree_ = 0;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Controls representative and transporter choice.  Without a seed the
/// representative of a class is its smallest element and transporters are
/// the first hit of an ascending scan; with a seed both are shuffled.
struct ConjugacyOptions {
  std::optional<std::uint64_t> seed;
};

/*
  Conjugacy structure of a group (or of a subgroup, computed inside it).
  Classes are ordered by their smallest element, independently of the
  chosen representatives.
*/
struct ConjugacyData {
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem> reps;
  std::vector<std::vector<Elem>> centralizers;  // C(rep), sorted
  std::vector<int> class_of;                   // indexed by ambient element, -1 outside
  std::vector<Elem> transporter;               // t with t rep t^-1 = x, indexed by ambient element

  std::size_t num_classes() const { return reps.size(); }
};

/// Conjugacy data of the subgroup with the given (sorted) elements.
ConjugacyData conjugacy_data(const FiniteGroup& g, std::span<const Elem> elements,
                             const ConjugacyOptions& options = {});
ConjugacyData conjugacy_data(const FiniteGroup& g, const ConjugacyOptions& options = {});

struct TableData;

/*
  A subgroup of an ambient FiniteGroup given as a sorted element set, with
  its own conjugacy data.  The whole group is the subgroup of all elements.
  Character tables are computed on first use and cached.
*/
class Subgroup {
 public:
  static std::shared_ptr<const Subgroup> whole(GroupPtr group, const ConjugacyOptions& options = {});
  /// Checks closure under multiplication.
  static std::shared_ptr<const Subgroup> make(GroupPtr group, std::vector<Elem> elements,
                                              const ConjugacyOptions& options = {});
  static std::shared_ptr<const Subgroup> make_unchecked(GroupPtr group, std::vector<Elem> elements,
                                                        const ConjugacyOptions& options = {});

  const FiniteGroup& ambient() const { return *group_; }
  const GroupPtr& ambient_ptr() const { return group_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Elem>& elements() const { return elements_; }
  bool contains(Elem x) const { return conj_.class_of[x] >= 0; }
  bool contains(const Subgroup& other) const;
  bool same_elements(const Subgroup& other) const;

  const ConjugacyData& conjugacy() const { return conj_; }
  std::size_t num_classes() const { return conj_.reps.size(); }
  int class_of(Elem x) const { return conj_.class_of[x]; }
  Elem rep(int c) const { return conj_.reps[c]; }
  std::size_t class_size(int c) const { return conj_.classes[c].size(); }
  std::size_t centralizer_order(int c) const { return order() / class_size(c); }
  int exponent() const;
  /// Class of rep(c)^k.
  int power_class(int c, long k) const;

  const TableData& table_data() const;

  /// The subgroup with the given elements (no closure check), memoized so
  /// that repeated stabilizers share one character table.
  std::shared_ptr<const Subgroup> subgroup(std::vector<Elem> elements) const;

 private:
  Subgroup(GroupPtr group, std::vector<Elem> elements, const ConjugacyOptions& options);

  GroupPtr group_;
  std::vector<Elem> elements_;
  ConjugacyData conj_;
  mutable std::once_flag table_once_;
  mutable std::shared_ptr<const TableData> table_;
  mutable std::mutex children_mutex_;
  mutable std::map<std::vector<Elem>, std::shared_ptr<const Subgroup>> children_;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

/// One C(k)-orbit of pairs (g, h) with g h = k.
struct PairOrbit {
  Elem target;
  Elem g;
  Elem h;
  std::vector<Elem> stabilizer;  // C(g) cap C(h), sorted
  std::size_t orbit_size;
};

/// Orbit representatives of C(k)-conjugation on {(g, h) : g h = k}, where k
/// must be one of the class representatives in conj.  The representative
/// pair of an orbit is the one with the smallest h (or the first h in a
/// seeded shuffle).
std::vector<PairOrbit> pair_orbits(const FiniteGroup& g, const ConjugacyData& conj, Elem k,
                                   const ConjugacyOptions& options = {});

/// Sorted intersection of two sorted element lists.
std::vector<Elem> intersect_sorted(std::span<const Elem> a, std::span<const Elem> b);

}  // namespace orbik
