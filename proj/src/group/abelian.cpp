#include "gchar/group/abelian.hpp"

#include <numeric>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"

namespace gchar {

AbelianGroup::AbelianGroup(std::vector<unsigned> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) orders_.push_back(1);
  stride_.assign(orders_.size(), 1);
  for (std::size_t k = orders_.size(); k-- > 0;) {
    if (orders_[k] == 0) fail(ErrorKind::InvalidArgument, "cyclic factor of order 0");
    stride_[k] = size_;
    size_ *= orders_[k];
    exponent_ = std::lcm(exponent_, orders_[k]);
  }
}

std::vector<unsigned> AbelianGroup::exponents(std::size_t g) const {
  std::vector<unsigned> e(orders_.size());
  for (std::size_t k = 0; k < orders_.size(); ++k) e[k] = static_cast<unsigned>((g / stride_[k]) % orders_[k]);
  return e;
}

std::size_t AbelianGroup::index(const std::vector<long>& exps) const {
  if (exps.size() != orders_.size()) fail(ErrorKind::InvalidArgument, "exponent vector length mismatch");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const long n = orders_[k];
    idx += static_cast<std::size_t>(((exps[k] % n) + n) % n) * stride_[k];
  }
  return idx;
}

std::size_t AbelianGroup::mul(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const std::size_t x = (a / stride_[k]) % orders_[k];
    const std::size_t y = (b / stride_[k]) % orders_[k];
    idx += ((x + y) % orders_[k]) * stride_[k];
  }
  return idx;
}

std::size_t AbelianGroup::inv(std::size_t a) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const std::size_t x = (a / stride_[k]) % orders_[k];
    idx += ((orders_[k] - x) % orders_[k]) * stride_[k];
  }
  return idx;
}

std::size_t AbelianGroup::pow(std::size_t a, long m) const {
  std::vector<long> e;
  for (unsigned x : exponents(a)) e.push_back(static_cast<long>(x) * m);
  return index(e);
}

unsigned AbelianGroup::order_of(std::size_t a) const {
  unsigned o = 1;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const unsigned x = static_cast<unsigned>((a / stride_[k]) % orders_[k]);
    o = std::lcm(o, orders_[k] / std::gcd(orders_[k], x));
  }
  return o;
}

Rational AbelianGroup::pairing(std::size_t g, std::size_t x) const {
  const auto a = exponents(g);
  const auto b = exponents(x);
  Rational s = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    s += make_rational(static_cast<long>((static_cast<unsigned long>(a[k]) * b[k]) % orders_[k]), orders_[k]);
  }
  // reduce into [0,1)
  Integer whole = s.get_num() / s.get_den();
  s -= Rational(whole);
  return s;
}

std::string AbelianGroup::element_string(std::size_t g) const {
  const auto e = exponents(g);
  if (e.size() == 1) return std::to_string(e[0]);
  std::string out = "(";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(e[k]);
  }
  return out + ")";
}

std::size_t AbelianGroup::parse_element(const std::string& text) const {
  const std::string t = trim(text);
  std::vector<std::string> parts;
  if (!t.empty() && t.front() == '(') {
    parts = split_top_level(strip_enclosing(t, '(', ')'), ',');
  } else {
    parts = {t};
  }
  if (parts.size() != orders_.size()) {
    fail(ErrorKind::Parse, "element '" + t + "' has " + std::to_string(parts.size()) + " coordinates, group has " +
                               std::to_string(orders_.size()));
  }
  std::vector<long> e;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const long v = parse_long(parts[k]);
    if (v < 0 || v >= static_cast<long>(orders_[k])) {
      fail(ErrorKind::Parse, "coordinate " + std::to_string(v) + " out of range in '" + t + "'");
    }
    e.push_back(v);
  }
  return index(e);
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    if (k) out += "x";
    out += "Z" + std::to_string(orders_[k]);
  }
  return out;
}

unsigned jordan_holder_length(const AbelianGroup& g) {
  std::size_t n = g.size();
  unsigned len = 0;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++len;
    }
  }
  if (n > 1) ++len;
  return len;
}

std::vector<unsigned> parse_orders(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& part : split_top_level(text, ',')) {
    const long v = parse_long(part);
    if (v < 1) fail(ErrorKind::Parse, "group orders must be positive, got '" + part + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

}  // namespace gchar
