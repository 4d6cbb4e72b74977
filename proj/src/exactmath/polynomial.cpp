#include "gchar/exactmath/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "gchar/error.hpp"

namespace gchar {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && gchar::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (gchar::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {Polynomial(), *this};
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  const Rational lead = divisor.coeffs_.back();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (gchar::is_zero(rem[k])) continue;
    Rational q = rem[k] / lead;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : coeffs_) den = lcm(den, c.get_den());
  Integer content = 0;
  for (const auto& c : coeffs_) content = gcd(content, Integer(c * den));
  Rational scale(den, content);
  scale.canonicalize();
  if (sgn(leading()) < 0) scale = -scale;
  return *this * scale;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (gchar::is_zero(c)) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const Polynomial& cyclotomic_polynomial(unsigned n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cyclotomic polynomial of order 0");
  static std::mutex mu;
  static std::map<unsigned, Polynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Polynomial p = Polynomial::monomial(n) - Polynomial::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = p.divmod(cyclotomic_polynomial(d)).first;
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

namespace {

std::vector<Integer> signed_divisors(const Integer& value) {
  Integer v = abs(value);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    if (d * d != v) out.push_back(v / d);
  }
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial term = Polynomial::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * Polynomial({-xs[j], Rational(1)}) * (Rational(1) / (xs[i] - xs[j]));
    }
    result = result + term;
  }
  return result;
}

bool has_integer_coeffs(const Polynomial& p) {
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible_over_q(const Polynomial& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  const Polynomial f = p.primitive_part();
  const long n = f.degree();

  std::vector<Rational> points;
  std::vector<Integer> values;
  // Sample points 0, 1, -1, 2, -2, ...
  for (long t = 0; static_cast<long>(points.size()) <= n / 2; ++t) {
    const long s = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
    Rational v = f.eval(Rational(s));
    // Integer root: linear factor.
    if (gchar::is_zero(v)) return false;
    points.emplace_back(s);
    values.push_back(v.get_num());
  }

  for (long k = 1; k <= n / 2; ++k) {
    std::vector<std::vector<Integer>> choices;
    for (long i = 0; i <= k; ++i) choices.push_back(signed_divisors(values[i]));
    std::vector<std::size_t> pick(k + 1, 0);
    const std::vector<Rational> xs(points.begin(), points.begin() + k + 1);
    while (true) {
      std::vector<Rational> ys;
      for (long i = 0; i <= k; ++i) ys.emplace_back(choices[i][pick[i]]);
      Polynomial g = interpolate(xs, ys);
      if (g.degree() == k && has_integer_coeffs(g) && (f % g).is_zero()) return false;
      long pos = 0;
      while (pos <= k && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
      if (pos > k) break;
    }
  }
  return true;
}

}  // namespace gchar
