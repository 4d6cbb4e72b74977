#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gchar/chainring/chainring.hpp"
#include "gchar/charring/charring.hpp"
#include "gchar/exactmath/cyclotomic.hpp"
#include "gchar/report.hpp"

namespace gchar {

/// Subgroups 1 = G_0 <= G_1 <= ... <= G_d of an ambient abelian group. Chains
/// entered by the user are strictly increasing and end at the ambient group;
/// chains obtained by intersecting with a subgroup may repeat levels and end
/// at that subgroup.
class SubgroupChain {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// 1 < mids... < G; throws InvalidArgument unless strictly increasing.
  static SubgroupChain from_intermediate(const AbelianGroup& g, const std::vector<Subgroup>& mids);
  /// Levels given in full; only G_0 = 1 and monotonicity are required.
  static SubgroupChain from_levels(const AbelianGroup& g, std::vector<Subgroup> levels);
  /// The chain H cap G_i.
  SubgroupChain restrict_to(const Subgroup& h) const;

  const AbelianGroup& group() const { return g_; }
  const std::vector<Subgroup>& levels() const { return levels_; }
  const Subgroup& level(std::size_t i) const { return levels_[i]; }
  const Subgroup& top() const { return levels_.back(); }
  std::size_t d() const { return levels_.size() - 1; }
  /// Smallest i with x in G_i; npos outside the top level.
  std::size_t layer(std::size_t x) const { return layer_[x]; }
  /// Order of the cyclotomic field holding all values: exp of the ambient group.
  unsigned field_order() const { return static_cast<unsigned>(g_.exponent()); }

  std::string to_string() const;
  bool operator==(const SubgroupChain& o) const { return g_ == o.g_ && levels_ == o.levels_; }
  bool operator!=(const SubgroupChain& o) const { return !(*this == o); }

 private:
  SubgroupChain(const AbelianGroup& g, std::vector<Subgroup> levels);
  AbelianGroup g_;
  std::vector<Subgroup> levels_;
  std::vector<std::size_t> layer_;
};

/// Every strictly increasing chain 1 < ... < G through proper nontrivial subgroups.
std::vector<SubgroupChain> all_subgroup_chains(const AbelianGroup& g);

/// Parses "(2)" or "(1,0)|(1,0);(0,1)": intermediate levels separated by '|',
/// generators of one level by ';'. The empty string is the chain 1 < G.
SubgroupChain parse_chain(const AbelianGroup& g, const std::string& text);

/// Upper triangular (d+1) x (d+1) matrix with entries in Q(zeta_N).
class TriangularMatrix {
 public:
  TriangularMatrix(std::size_t size, unsigned order);

  std::size_t size() const { return size_; }
  unsigned order() const { return order_; }
  /// Entry (i, j) with i <= j.
  const Cyclotomic& at(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }
  Cyclotomic& at(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }
  std::size_t stored() const { return entries_.size(); }

  TriangularMatrix operator+(const TriangularMatrix& o) const;
  TriangularMatrix operator-(const TriangularMatrix& o) const;
  TriangularMatrix operator*(const Rational& c) const;
  /// Entrywise product.
  TriangularMatrix hadamard(const TriangularMatrix& o) const;
  bool operator==(const TriangularMatrix& o) const;
  bool operator!=(const TriangularMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Nested arrays; entry (i, j) is the coefficient vector of its value, null
  /// below the diagonal.
  json to_json() const;
  /// "[[4, 1], [., 2]]" when all entries are rational.
  std::string to_string() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  void check_shape(const TriangularMatrix& o) const;
  std::size_t size_;
  unsigned order_;
  std::vector<Cyclotomic> entries_;
};

/// Generalized class function: a triangular matrix per element of the top
/// level of its chain (stored for every ambient element, zero outside).
class GenClassFunction {
 public:
  explicit GenClassFunction(const SubgroupChain& chain);

  const SubgroupChain& chain() const { return chain_; }
  const TriangularMatrix& at(std::size_t x) const { return values_[x]; }
  TriangularMatrix& at(std::size_t x) { return values_[x]; }

  GenClassFunction operator+(const GenClassFunction& o) const;
  GenClassFunction operator-(const GenClassFunction& o) const;
  GenClassFunction operator*(const Rational& c) const;
  GenClassFunction hadamard(const GenClassFunction& o) const;
  bool operator==(const GenClassFunction& o) const;
  bool operator!=(const GenClassFunction& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Entries (j, l) with j below the layer of x vanish, and nothing lives
  /// outside the top level.
  bool respects_zero_blocks() const;

  /// Rational coordinates of all entries, in a fixed order.
  std::vector<Rational> flatten() const;
  json to_json() const;

 private:
  void check_same(const GenClassFunction& o) const;
  SubgroupChain chain_;
  std::vector<TriangularMatrix> values_;
};

/// Value of the character T_a at x for a, x in the ambient group.
Cyclotomic character_value(const AbelianGroup& g, std::size_t a, std::size_t x);

/// c_n: entries (j, l) equal n for layer(x) <= j <= l.
GenClassFunction constant_cn(const SubgroupChain& chain, const Rational& n);

/// The glider of essential length e generated by v = sum of weight vectors
/// for the characters T_a (a in `labels`) restricted to G_e: M_j = C G_{e-j} v.
/// Entry (i, j) at x in G_i is the character of C G_m v with m = max(i, e - j),
/// i.e. the sum of the distinct restrictions of the labels to G_m.
GenClassFunction glider_character(const SubgroupChain& chain, std::size_t e, Subset labels);

/// d = 1: the glider of A in P(G); A empty gives C > 0.
GenClassFunction glider_char_subset(const SubgroupChain& chain, Subset a);
/// d = 2: the glider of (A, pi(A)).
GenClassFunction glider_char_chain2(const SubgroupChain& chain, Subset a);

/// Entry (i, j) = (1/|G_i|) sum over x in G_i of f_ij(x) conj(g_ij(x)).
TriangularMatrix inner_product(const GenClassFunction& f, const GenClassFunction& g);

/// Induction from f on chain.restrict_to(H) to `target`, by the g0-sum formula.
GenClassFunction induce(const GenClassFunction& f, const SubgroupChain& target);

/// chi_{H~}(h)_{jl} = |H| for layer(h) <= j <= l when <h> = H, else 0; on the
/// chain H cap G_i. Throws NotCyclic.
GenClassFunction chi_cyclic_tilde(const Subgroup& h, const SubgroupChain& chain);

std::vector<Subgroup> cyclic_subgroups(const AbelianGroup& g);

/// Sum over cyclic H of Ind chi_{H~}.
GenClassFunction artin_sum(const SubgroupChain& chain);
/// Checks artin_sum = c_|G| entrywise.
Report artin_check(const SubgroupChain& chain);

struct ArtinTerm {
  std::string subgroup;
  std::string source;  // "chi~" or "glider e=<e> {labels}"
  Rational coefficient;
};

struct ArtinCertificate {
  std::vector<ArtinTerm> terms;
  std::size_t family_size = 0;
  json to_json() const;
};

/// Rational coefficients expressing c_|G| * f as a combination of functions
/// induced from cyclic subgroups (their glider characters and chi_{H~});
/// throws Unsolvable when none exist.
ArtinCertificate artin_decompose(const GenClassFunction& f);

/// Linear extension of glider_char_subset over the chain 1 < G of the
/// algebra's group.
GenClassFunction realize(const RingElement& x);
/// Linear extension over the chain 1 < H < G: full labels are el-2 gliders,
/// lower labels (empty, B) the el-1 gliders C H v > C v > 0.
GenClassFunction realize(const ChainRingElement& x);
SubgroupChain chain_of(const Chain2& c);

/// Inner products of irreducible gliders: [[n^2,1],[.,n]] for every nonempty
/// A (d = 1) and the C_{n,nm} pattern for the given d = 2 chain.
Report verify_inner_products(const SubgroupChain& chain);

}  // namespace gchar
