#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gchar/exactmath/rational.hpp"

namespace gchar {

/// Product of cyclic groups Z_{n_1} x ... x Z_{n_k}. Elements are numbered by
/// their exponent vectors in lexicographic order (first coordinate most
/// significant), so the identity is element 0.
class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(std::vector<unsigned>{1}) {}
  explicit AbelianGroup(std::vector<unsigned> orders);

  const std::vector<unsigned>& orders() const { return orders_; }
  std::size_t size() const { return size_; }
  std::size_t identity() const { return 0; }
  unsigned exponent() const { return exponent_; }

  std::vector<unsigned> exponents(std::size_t g) const;
  /// Index of the exponent vector, reduced modulo the factor orders.
  std::size_t index(const std::vector<long>& exps) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t pow(std::size_t a, long k) const;
  unsigned order_of(std::size_t a) const;

  /// Value in Q/Z (a rational in [0,1)) with phi(g)(x) = exp(2 pi i * value),
  /// where phi(b_i)(b_i) = zeta_{n_i} on each cyclic factor.
  Rational pairing(std::size_t g, std::size_t x) const;

  /// "3" for a single factor, "(1,0)" otherwise.
  std::string element_string(std::size_t g) const;
  /// Accepts "(a1,...,ak)" and, for a single factor, a bare integer.
  std::size_t parse_element(const std::string& text) const;
  std::string to_string() const;

  bool operator==(const AbelianGroup& o) const { return orders_ == o.orders_; }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

 private:
  std::vector<unsigned> orders_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
  unsigned exponent_ = 1;
};

/// Sum of prime multiplicities of |G| (0 for the trivial group).
unsigned jordan_holder_length(const AbelianGroup& g);

/// Parses "--orders" values such as "2,4".
std::vector<unsigned> parse_orders(const std::string& text);

}  // namespace gchar
