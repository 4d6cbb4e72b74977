#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gchar/exactmath/rational.hpp"

namespace gchar {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients; trailing zeros are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t degree, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  Rational leading() const;
  Rational eval(const Rational& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Euclidean division; throws InvalidArgument when dividing by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& m) const { return divmod(m).second; }

  Polynomial monic() const;

  /// Rational multiple with coprime integer coefficients and positive leading
  /// coefficient.
  Polynomial primitive_part() const;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Phi_N via Phi_N = (X^N - 1) / prod_{d | N, d < N} Phi_d. Results are cached.
const Polynomial& cyclotomic_polynomial(unsigned n);

/// Irreducibility over Q by Kronecker's method: searches for an integer factor
/// of every degree up to deg/2 by interpolating through divisors of sample
/// values. Exponential in the degree; meant for the small minimal polynomials
/// that show up in the verification suites (degree <= 8).
bool is_irreducible_over_q(const Polynomial& p);

unsigned euler_phi(unsigned n);

}  // namespace gchar
