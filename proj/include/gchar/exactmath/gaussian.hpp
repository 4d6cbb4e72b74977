#pragma once

#include <string>

#include "gchar/error.hpp"
#include "gchar/exactmath/rational.hpp"

namespace gchar {

/// a + b i with a, b rational: Q(zeta_4) with its two coordinates spelled out.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const {
    if (is_zero()) fail(ErrorKind::InvalidArgument, "inverse of zero Gaussian rational");
    const Rational n = norm();
    return {re / n, -im / n};
  }
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  // Lexicographic on (re, im); only used to order labels deterministically.
  bool operator<(const GaussianRational& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }

  /// Canonical text: "0", "3/2", "i", "-i", "1+i", "1/2-3/4*i", "2*i".
  std::string to_string() const {
    const bool has_re = sgn(re) != 0;
    const bool has_im = sgn(im) != 0;
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out = re.get_str();
    if (has_im) {
      Rational a = abs(im);
      if (sgn(im) < 0) out += "-";
      else if (has_re) out += "+";
      out += (a == 1) ? "i" : a.get_str() + "*i";
    }
    return out;
  }
};

}  // namespace gchar
