#include "gchar/exactmath/matrix.hpp"

namespace gchar {

namespace {

// Integer rows with denominators cleared, plus the product of the scale
// factors (needed to recover the determinant).
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m, Rational* scale) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  Rational total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) den = lcm(den, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = Integer(m(i, j) * den);
    total *= den;
  }
  if (scale) *scale = total;
  return rows;
}

// Fraction-free row echelon in place. Returns the rank; *sign tracks row
// swaps, *last_pivot the final Bareiss pivot.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, int* sign,
                    Integer* last_pivot) {
  const std::size_t n = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  int s = 1;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      s = -s;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (sign) *sign = s;
  if (last_pivot) *last_pivot = prev;
  return r;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  auto rows = integer_rows(m, nullptr);
  return bareiss(rows, m.cols(), nullptr, nullptr);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Rational scale;
  auto rows = integer_rows(m, &scale);
  int sign = 1;
  Integer last;
  if (bareiss(rows, m.cols(), &sign, &last) < m.rows()) return 0;
  Rational det(last * sign);
  det /= scale;
  return det;
}

}  // namespace gchar
