#pragma once

#include <string>
#include <vector>

#include "gchar/exactmath/matrix.hpp"
#include "gchar/exactmath/polynomial.hpp"
#include "gchar/exactmath/rational.hpp"

namespace gchar {

/// Element of Q(zeta_N) = Q[X]/(Phi_N), kept reduced modulo Phi_N so that
/// equality is coefficientwise.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(unsigned order);
  Cyclotomic(unsigned order, const Rational& value);
  Cyclotomic(unsigned order, const Polynomial& p);

  /// zeta_N^k for any integer k.
  static Cyclotomic root_of_unity(unsigned order, long k);

  unsigned order() const { return order_; }
  /// Coefficient vector of length deg Phi_N (low degree first).
  std::vector<Rational> coefficients() const;
  const Polynomial& polynomial() const { return value_; }

  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return value_.degree() <= 0; }
  /// Requires is_rational().
  Rational rational_value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& c) const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;

  /// Multiplicative inverse; throws InvalidArgument on zero.
  Cyclotomic inverse() const;
  /// The automorphism zeta -> zeta^{-1} (complex conjugation).
  Cyclotomic conj() const;
  /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^{M/N}; requires N | M.
  Cyclotomic lift(unsigned target_order) const;

  std::string to_string() const;

 private:
  void check_same(const Cyclotomic& o) const;
  unsigned order_;
  Polynomial value_;
};

template <>
struct FieldTraits<Cyclotomic> {
  using Context = unsigned;  // the order N
  static Cyclotomic zero(Context n) { return Cyclotomic(n); }
  static Cyclotomic one(Context n) { return Cyclotomic(n, Rational(1)); }
  static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
};

using CyclotomicMatrix = ExactMatrix<Cyclotomic>;

}  // namespace gchar
