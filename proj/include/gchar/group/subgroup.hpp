#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gchar/group/abelian.hpp"

namespace gchar {

/// A product-of-cyclic-groups model of some finite abelian group X, with the
/// bijection to X's own element numbering. `to_local[k]` is the element of X
/// for presentation index k; `from_local[x]` the inverse (npos if x lies
/// outside, used when X is a subgroup of a bigger group).
struct Presentation {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  AbelianGroup group;
  std::vector<std::size_t> basis;  // generators in X, one per cyclic factor
  std::vector<std::size_t> to_local;
  std::vector<std::size_t> from_local;
};

class Subgroup {
 public:
  /// Validates closure; `elements` may be in any order.
  Subgroup(const AbelianGroup& owner, std::vector<std::size_t> elements);
  static Subgroup generated(const AbelianGroup& owner, const std::vector<std::size_t>& gens);
  static Subgroup trivial(const AbelianGroup& owner) { return Subgroup(owner, {owner.identity()}); }
  static Subgroup whole(const AbelianGroup& owner);

  const AbelianGroup& owner() const { return owner_; }
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::size_t g) const { return member_[g]; }
  const std::vector<bool>& membership() const { return member_; }
  bool is_trivial() const { return size() == 1; }
  bool is_whole() const { return size() == owner_.size(); }
  bool is_subgroup_of(const Subgroup& o) const;

  /// Cyclic decomposition H = <h_1> x ... x <h_r>. For H = G this is the
  /// standard factor basis; otherwise a backtracking search over candidates
  /// ordered by element order (descending) then canonical order.
  std::vector<std::size_t> decomposition_basis() const;
  Presentation presentation() const;
  /// Presentation along an explicitly given basis (alternate convention).
  Presentation presentation(const std::vector<std::size_t>& basis) const;

  /// Generator of smallest canonical index, if cyclic.
  std::optional<std::size_t> cyclic_generator() const;

  /// "{0,2}" style listing in canonical order.
  std::string to_string() const;

  bool operator==(const Subgroup& o) const { return owner_ == o.owner_ && elements_ == o.elements_; }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  /// Canonical order: by size, then lexicographically by element list.
  bool operator<(const Subgroup& o) const;

 private:
  AbelianGroup owner_;
  std::vector<std::size_t> elements_;
  std::vector<bool> member_;
};

class QuotientGroup {
 public:
  QuotientGroup(const AbelianGroup& owner, const Subgroup& n);

  const AbelianGroup& owner() const { return owner_; }
  const Subgroup& normal() const { return n_; }
  std::size_t size() const { return reps_.size(); }
  /// Coset representatives (smallest element of each coset), ascending.
  const std::vector<std::size_t>& representatives() const { return reps_; }
  std::size_t coset_of(std::size_t g) const { return coset_[g]; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  unsigned order_of(std::size_t coset) const;

  /// Coset index of a generator with smallest representative, if cyclic.
  std::optional<std::size_t> cyclic_generator() const;

  /// Model of G/N as a product of cyclic groups, local numbering = coset index.
  Presentation presentation() const;

 private:
  AbelianGroup owner_;
  Subgroup n_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_;
};

/// Every subgroup exactly once, in canonical order.
std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& g);

/// Subgroups of prime order; throws MinimalOfTrivial for |G| = 1.
std::vector<Subgroup> minimal_subgroups(const AbelianGroup& g);

/// Minimal subgroups of G/N pulled back to subgroups L with N < L.
std::vector<Subgroup> minimal_overgroups(const AbelianGroup& g, const Subgroup& n);

/// The surjection pi: G -> H obtained as G -> G^ -> H^ -> H, returned as a
/// table indexed by elements of G with values in G (lying in H). The duality
/// on H uses H's decomposition basis unless `basis` is given.
std::vector<std::size_t> duality_projection(const AbelianGroup& g, const Subgroup& h,
                                            const std::optional<std::vector<std::size_t>>& basis = std::nullopt);

/// Parses a generator list "(1,0);(0,2)" (or "2" for a cyclic group).
Subgroup parse_subgroup(const AbelianGroup& g, const std::string& text);

}  // namespace gchar
