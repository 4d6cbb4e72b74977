#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gchar/exactmath/algebra.hpp"
#include "gchar/exactmath/rational.hpp"
#include "gchar/group/subgroup.hpp"
#include "gchar/group/subset.hpp"

namespace gchar {

enum class ContractionMode {
  ModEmpty,      // chi_empty = 0
  ModEmptyAndG,  // chi_empty = chi_G = 0
};

std::string to_string(ContractionMode m);
/// "mod-empty" or "mod-empty-g"; throws Parse.
ContractionMode parse_mode(const std::string& text);

/// The set product C = AB together with the multiplicity c of chi_empty.
struct CountedProduct {
  Subset set = 0;
  Integer collisions = 0;
};

/// chi_A chi_B = chi_C + c chi_empty with c half the number of
/// (g, g', h, h') with g != g' in A, h != h' in B and gh = g'h'.
CountedProduct subset_product_counted(const AbelianGroup& g, Subset a, Subset b);

/// R(G~) tensored with Q for the chain 1 < G, with the contraction mode
/// fixed per algebra. Basis labels are the nonempty subsets that are not
/// contracted, numbered by increasing bitmask.
class CharAlgebra {
 public:
  CharAlgebra(const AbelianGroup& g, ContractionMode mode);

  const AbelianGroup& group() const { return group_; }
  ContractionMode mode() const { return mode_; }
  Subset full() const { return full_; }
  bool is_contracted(Subset s) const { return s == 0 || (mode_ == ContractionMode::ModEmptyAndG && s == full_); }

  std::size_t dim() const { return labels_.size(); }
  Subset label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(Subset s) const;

  FiniteAlgebra finite_algebra() const;

  bool operator==(const CharAlgebra& o) const { return group_ == o.group_ && mode_ == o.mode_; }
  bool operator!=(const CharAlgebra& o) const { return !(*this == o); }

 private:
  AbelianGroup group_;
  ContractionMode mode_;
  Subset full_;
  std::vector<Subset> labels_;
};

/// Finite Q-linear combination of subset labels of one CharAlgebra.
class RingElement {
 public:
  explicit RingElement(const CharAlgebra& alg) : alg_(alg) {}
  static RingElement chi(const CharAlgebra& alg, Subset s, const Rational& c = 1);
  static RingElement one(const CharAlgebra& alg) { return chi(alg, singleton(alg.group().identity())); }

  const CharAlgebra& algebra() const { return alg_; }
  const std::map<Subset, Rational>& terms() const { return terms_; }
  Rational coefficient(Subset s) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c chi_s, dropping contracted labels.
  void add_term(Subset s, const Rational& c);

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator*(const Rational& c) const;
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  bool operator==(const RingElement& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  SparseVector coordinates() const;
  static RingElement from_coordinates(const CharAlgebra& alg, const SparseVector& v);

  /// Terms ordered by the sorted element list of each label.
  std::vector<std::pair<Subset, Rational>> sorted_terms() const;
  /// "2*{0,1} - 1/2*{3}"; "0" for zero.
  std::string to_string() const;

 private:
  void check_same(const RingElement& o) const;
  CharAlgebra alg_;
  std::map<Subset, Rational> terms_;
};

RingElement mul(const RingElement& x, const RingElement& y);

/// Parses "{0,1}", "2*{0,1} - {3}", "1/2*{0}+1/2*{2}".
RingElement parse_ring_element(const CharAlgebra& alg, const std::string& text);

/// n(A): the subgroup that appears as the idempotent among the powers of A.
Subgroup n_of(const AbelianGroup& g, Subset a);

/// Smallest exponent m with A^m = n(A).
unsigned n_exponent(const AbelianGroup& g, Subset a);

/// (g, N) with N = n(A) and g the smallest element with A inside gN.
std::pair<std::size_t, Subgroup> coset_cover(const AbelianGroup& g, Subset a);

/// chi_{gN} - chi_A over all nonempty A, zeros dropped. Requires ModEmptyAndG.
std::vector<RingElement> radical_generators(const CharAlgebra& alg);

/// Pushforward along G -> G/H into the ModEmpty algebra of the presented
/// quotient. Requires ModEmpty.
RingElement omega(const Subgroup& h, const RingElement& x);
/// The ModEmpty algebra of G/H that omega lands in, with the coset map.
CharAlgebra omega_target(const Subgroup& h);
std::vector<std::size_t> omega_map(const Subgroup& h);

/// psi(G,H) = prod over L with [L:H] prime of (chi_H - chi_L), computed in
/// the given algebra. Throws HNotProper for H = G.
RingElement psi(const CharAlgebra& alg, const Subgroup& h);

/// (1/|A|) sum_{g in A} chi_{g}.
RingElement check_of(const CharAlgebra& alg, Subset a);
/// N-check times the product over minimal L/N of (1 - L-check).
RingElement epsilon_check(const CharAlgebra& alg, const Subgroup& n);

struct PrimitiveIdempotent {
  Subgroup h;
  Subgroup n;
  RingElement e;
};

/// psi(G,H) eps(G,N) over H <= N with G/N cyclic; psi(G,G) is chi_G.
/// Requires ModEmpty.
std::vector<PrimitiveIdempotent> primitive_central_idempotents(const CharAlgebra& alg);

/// Smallest k < l with A^k = A^l.
std::pair<unsigned, unsigned> integrality_witness(const AbelianGroup& g, Subset a);

/// Sum over proper subgroups H of |G/H|.
std::size_t quotient_dimension_target(const AbelianGroup& g);

}  // namespace gchar
