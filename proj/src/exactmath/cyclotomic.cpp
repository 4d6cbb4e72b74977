#include "gchar/exactmath/cyclotomic.hpp"

#include "gchar/error.hpp"
#include "gchar/exactmath/matrix.hpp"

namespace gchar {

Cyclotomic::Cyclotomic(unsigned order) : order_(order) {
  if (order == 0) fail(ErrorKind::InvalidArgument, "cyclotomic field of order 0");
}

Cyclotomic::Cyclotomic(unsigned order, const Rational& value)
    : Cyclotomic(order) {
  value_ = Polynomial::constant(value);
}

Cyclotomic::Cyclotomic(unsigned order, const Polynomial& p) : Cyclotomic(order) {
  value_ = p % cyclotomic_polynomial(order);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long k) {
  const long n = static_cast<long>(order);
  const long e = ((k % n) + n) % n;
  return Cyclotomic(order, Polynomial::monomial(static_cast<std::size_t>(e)));
}

std::vector<Rational> Cyclotomic::coefficients() const {
  const auto deg = static_cast<std::size_t>(cyclotomic_polynomial(order_).degree());
  std::vector<Rational> out(deg, Rational(0));
  for (std::size_t i = 0; i < value_.coeffs().size(); ++i) out[i] = value_.coeffs()[i];
  return out;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) fail(ErrorKind::InvalidArgument, "cyclotomic value is not rational");
  return value_.coeff(0);
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    fail(ErrorKind::InvalidArgument, "cyclotomic order mismatch: " + std::to_string(order_) +
                                         " vs " + std::to_string(o.order_));
  }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same(o);
  Cyclotomic r(order_);
  r.value_ = value_ + o.value_;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  check_same(o);
  Cyclotomic r(order_);
  r.value_ = value_ - o.value_;
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(order_);
  r.value_ = -value_;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same(o);
  return Cyclotomic(order_, value_ * o.value_);
}

Cyclotomic Cyclotomic::operator*(const Rational& c) const {
  Cyclotomic r(order_);
  r.value_ = value_ * c;
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return order_ == o.order_ && value_ == o.value_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidArgument, "inverse of zero cyclotomic");
  // Solve (multiplication-by-this) * y = 1 in the power basis.
  const auto deg = static_cast<std::size_t>(cyclotomic_polynomial(order_).degree());
  RationalMatrix m(deg, deg);
  for (std::size_t j = 0; j < deg; ++j) {
    Cyclotomic col = *this * Cyclotomic(order_, Polynomial::monomial(j));
    auto c = col.coefficients();
    for (std::size_t i = 0; i < deg; ++i) m(i, j) = c[i];
  }
  std::vector<Rational> rhs(deg, Rational(0));
  rhs[0] = 1;
  auto y = solve(m, rhs);
  return Cyclotomic(order_, Polynomial(std::move(y)));
}

Cyclotomic Cyclotomic::conj() const {
  const auto& c = value_.coeffs();
  std::vector<Rational> v(order_, Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) v[(order_ - k % order_) % order_] += c[k];
  return Cyclotomic(order_, Polynomial(std::move(v)));
}

Cyclotomic Cyclotomic::lift(unsigned target_order) const {
  if (target_order % order_ != 0) {
    fail(ErrorKind::InvalidArgument, "cannot lift Q(zeta_" + std::to_string(order_) +
                                         ") into Q(zeta_" + std::to_string(target_order) + ")");
  }
  const unsigned step = target_order / order_;
  const auto& c = value_.coeffs();
  std::vector<Rational> v(c.empty() ? 0 : (c.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) v[k * step] = c[k];
  return Cyclotomic(target_order, Polynomial(std::move(v)));
}

std::string Cyclotomic::to_string() const {
  return value_.to_string("z" + std::to_string(order_));
}

}  // namespace gchar
