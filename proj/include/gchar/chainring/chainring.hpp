#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gchar/charring/charring.hpp"
#include "gchar/report.hpp"

namespace gchar {

/// The chain 1 < H < G together with the duality surjection pi: G -> H.
/// Elements of H are written with their numbering in G.
class Chain2 {
 public:
  Chain2(const AbelianGroup& g, const Subgroup& h,
         const std::optional<std::vector<std::size_t>>& h_basis = std::nullopt);

  const AbelianGroup& group() const { return g_; }
  const Subgroup& sub() const { return h_; }
  std::size_t pi(std::size_t x) const { return pi_[x]; }
  const std::vector<std::size_t>& pi_table() const { return pi_; }
  Subset pi_set(Subset a) const { return subset_image(pi_, a); }

  /// Q(H~) in presentation coordinates, and the maps between H-subsets of G
  /// and subsets of the presented group.
  const Presentation& h_presentation() const { return pres_; }
  const CharAlgebra& h_algebra() const { return h_alg_; }
  Subset to_h_local(Subset b) const;
  Subset from_h_local(Subset b) const;

  std::size_t full_count() const { return (std::size_t{1} << g_.size()) - 1; }
  std::size_t lower_count() const { return (std::size_t{1} << h_.size()) - 1; }
  std::size_t dim() const { return full_count() + lower_count(); }

  bool operator==(const Chain2& o) const { return g_ == o.g_ && h_ == o.h_ && pi_ == o.pi_; }
  bool operator!=(const Chain2& o) const { return !(*this == o); }

 private:
  AbelianGroup g_;
  Subgroup h_;
  std::vector<std::size_t> pi_;
  Presentation pres_;
  CharAlgebra h_alg_;
};

/// chi_(A, pi(A)) for nonempty A in G, chi_(empty, B) for nonempty B in H, or
/// the zero label chi_(empty, empty).
struct ChainLabel {
  enum class Kind { Full, Lower, Zero };
  Kind kind = Kind::Zero;
  Subset set = 0;    // A for Full, B for Lower
  Subset image = 0;  // pi(A) for Full

  static ChainLabel full(const Chain2& c, Subset a);
  static ChainLabel lower(const Chain2& c, Subset b);

  auto key() const { return std::make_pair(kind, set); }
  bool operator<(const ChainLabel& o) const { return key() < o.key(); }
  bool operator==(const ChainLabel& o) const { return key() == o.key(); }
};

class ChainRingElement {
 public:
  explicit ChainRingElement(const Chain2& c) : chain_(c) {}
  static ChainRingElement basis(const Chain2& c, const ChainLabel& l, const Rational& coef = 1);
  static ChainRingElement one(const Chain2& c);

  const Chain2& chain() const { return chain_; }
  const std::map<ChainLabel, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ChainLabel& l) const;
  void add_term(const ChainLabel& l, const Rational& c);

  ChainRingElement operator+(const ChainRingElement& o) const;
  ChainRingElement operator-(const ChainRingElement& o) const;
  ChainRingElement operator*(const ChainRingElement& o) const;
  ChainRingElement operator*(const Rational& c) const;
  bool operator==(const ChainRingElement& o) const { return chain_ == o.chain_ && terms_ == o.terms_; }
  bool operator!=(const ChainRingElement& o) const { return !(*this == o); }

  /// Full labels take indices A - 1; Lower labels follow in order of their
  /// H-local bitmask.
  SparseVector coordinates() const;
  static ChainRingElement from_coordinates(const Chain2& c, const SparseVector& v);

  /// "full:{0,1} + 2*lower:{0}"; "0" for zero.
  std::string to_string() const;

 private:
  void check_same(const ChainRingElement& o) const;
  Chain2 chain_;
  std::map<ChainLabel, Rational> terms_;
};

ChainRingElement chain_mul(const ChainRingElement& x, const ChainRingElement& y);

/// Parses "full:{0,1}", "2*full:{0} - lower:{2}"; throws Parse.
ChainRingElement parse_chain_element(const Chain2& c, const std::string& text);

/// Basis label for coordinate index i.
ChainLabel chain_label_at(const Chain2& c, std::size_t i);

/// x -> (x(1 - e), image in Q(H~)) with e = chi_(empty,{1}).
std::pair<ChainRingElement, RingElement> split_iso(const ChainRingElement& x);
/// chi_B in Q(H~) -> chi_(empty, B).
ChainRingElement lift(const Chain2& c, const RingElement& h);

/// f(chi_(A,pi(A))) = chi_(A,pi(A)) - sum over h in pi(A) of chi_(empty,{h}).
ChainRingElement f_map(const Chain2& c, Subset a);

FiniteAlgebra chain_algebra(const Chain2& c);

/// T = Q(H<G)(1 - e) modulo the coset-cover ideal against sum |G/N| over N < G,
/// with the images of psi(G,N) checked modulo the ideal.
Report verify_t_quotient(const Chain2& c);

/// Lower labels span a two-sided ideal whose quotient has the structure
/// constants of the mod-empty character algebra of G.
Report verify_lower_ideal(const Chain2& c);

/// Central idempotent e, split multiplicativity and reassembly on all basis
/// pairs, associativity and commutativity on basis triples.
Report verify_chain_structure(const Chain2& c);

/// {(|A|, |pi(A)|)} over nonempty A in Z_{nm} with H the subgroup of order n.
std::set<std::pair<std::size_t, std::size_t>> c_set(unsigned n, unsigned nm);

}  // namespace gchar
