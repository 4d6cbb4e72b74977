#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gchar/exactmath/algebra.hpp"
#include "gchar/exactmath/gaussian.hpp"
#include "gchar/report.hpp"

namespace gchar {

/// "3/2", "i", "-1/2+3*i", "p/q+r/s*i"; throws Parse.
GaussianRational parse_gaussian(const std::string& text);

/// Point [lambda:mu] of P^1 over Q(i), stored with the first nonzero
/// coordinate equal to 1.
class ProjPoint {
 public:
  ProjPoint(const GaussianRational& lambda, const GaussianRational& mu);
  static ProjPoint parse(const std::string& text);  // "[1:-i]"

  const GaussianRational& lambda() const { return l_; }
  const GaussianRational& mu() const { return m_; }
  std::string to_string() const;

  bool operator==(const ProjPoint& o) const { return l_ == o.l_ && m_ == o.m_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const;

 private:
  GaussianRational l_, m_;
};

/// [1:1], [1:-1], [1:0], [0:1], [1:i], [1:-i].
const std::vector<ProjPoint>& special_points();
bool is_special(const ProjPoint& p);

/// V4 = {1, a, b, c} numbered 0..3 so that the product is XOR of indices.
using V4Set = std::uint8_t;
constexpr V4Set kV4Full = 0xF;
std::string v4_element_name(unsigned g);
std::string v4_set_string(V4Set s);
V4Set parse_v4_set(const std::string& text);
V4Set v4_product(V4Set a, V4Set b);

struct UPart {
  enum class Kind { None, Point, Star };
  Kind kind = Kind::None;
  ProjPoint point{GaussianRational(1), GaussianRational(0)};  // meaningful for Point only

  static UPart none() { return {}; }
  static UPart star() { return {Kind::Star, ProjPoint(GaussianRational(1), GaussianRational(0))}; }
  static UPart at(const ProjPoint& p) { return {Kind::Point, p}; }

  /// Representative points: the point itself, [1:0] and [0:1] for Star.
  std::vector<ProjPoint> representatives() const;
  std::string to_string() const;  // "{}", "*", "[1:i]"

  bool operator==(const UPart& o) const { return kind == o.kind && (kind != Kind::Point || point == o.point); }
  bool operator!=(const UPart& o) const { return !(*this == o); }
  bool operator<(const UPart& o) const;
};

struct Q8Label {
  V4Set set = 0;
  UPart u;

  bool is_zero() const { return set == 0 && u.kind == UPart::Kind::None; }
  static Q8Label parse(const std::string& text);  // "({a,b},[1:i])", "({},*)"
  std::string to_string() const;

  bool operator==(const Q8Label& o) const { return set == o.set && u == o.u; }
  bool operator!=(const Q8Label& o) const { return !(*this == o); }
  bool operator<(const Q8Label& o) const;
};

/// g [lambda:mu] for g in V4: 1 fixes, a swaps, b negates lambda, c gives [-mu:lambda].
ProjPoint point_action(unsigned g, const ProjPoint& p);

/// Constituents of U tensor U met by the product vector: 1 for the
/// antisymmetric part, then b, c, a.
V4Set uu_product(const ProjPoint& p, const ProjPoint& q);

/// Component-model product of two labels.
Q8Label label_mul(const Q8Label& x, const Q8Label& y);

/// Smallest n with x^n = (V4, *); throws NotAbsorbing on a cycle avoiding it.
unsigned minimal_absorbing_exponent(const Q8Label& x);

class Q8RingElement {
 public:
  Q8RingElement() = default;
  static Q8RingElement basis(const Q8Label& l, const Rational& c = 1);
  static Q8RingElement parse(const std::string& text);

  const std::map<Q8Label, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Q8Label& l) const;
  void add_term(const Q8Label& l, const Rational& c);

  Q8RingElement operator+(const Q8RingElement& o) const;
  Q8RingElement operator-(const Q8RingElement& o) const;
  Q8RingElement operator*(const Q8RingElement& o) const;
  Q8RingElement operator*(const Rational& c) const;
  bool operator==(const Q8RingElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const Q8RingElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<Q8Label, Rational> terms_;
};

/// The 127 nonzero labels with U-part None, Star or a special point.
std::vector<Q8Label> special_labels();
FiniteAlgebra special_algebra(const std::vector<Q8Label>& labels);

/// Points with both coordinates nonzero avoiding the special points, drawn
/// from a seeded generator.
std::vector<ProjPoint> generic_points(unsigned seed, std::size_t count);

/// Every explicit product and identity of the Q8 section, the idempotent
/// list, and the radical of the special-point subalgebra.
Report verify_q8_structure(unsigned seed = 0);

}  // namespace gchar
